#include "pwrep/search.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "pwrep/repetition.hpp"

namespace pwrep {

namespace {

constexpr int kHole = 2;

inline bool compat(int a, int b) { return a == kHole || b == kHole || a == b; }

// A set of distinct binary full words.  Words of length <= 62 are packed
// into one machine word as (1 << len) | bits; longer ones (only reachable
// far beyond the published table cells) fall back to strings.
struct WordSet {
  std::unordered_set<uint64_t> packed;
  std::set<std::string> big;

  size_t size() const { return packed.size() + big.size(); }
};

// A full binary word in the same two representations.
struct Key {
  uint64_t packed = 0;
  std::string big;

  bool is_packed() const { return big.empty(); }
};

bool set_contains(const WordSet& set, const Key& key) {
  return key.is_packed() ? set.packed.count(key.packed) > 0
                         : set.big.count(key.big) > 0;
}

// Insertions are journaled so that backtracking can undo them.
struct Journal {
  std::vector<uint64_t> packed;
  std::vector<std::string> big;

  struct Mark {
    size_t packed = 0;
    size_t big = 0;
  };
  Mark mark() const { return {packed.size(), big.size()}; }

  void rewind(WordSet& set, const Mark& m) {
    while (packed.size() > m.packed) {
      set.packed.erase(packed.back());
      packed.pop_back();
    }
    while (big.size() > m.big) {
      set.big.erase(big.back());
      big.pop_back();
    }
  }
};

// One factor occurrence that contains a hole and is compatible with a full
// antisquare.  The occurrence is identified by that full completion, the
// letter the completion assigns to the (first) hole, and the factor order.
struct DerivedOcc {
  Key key;
  int hole_value = 0;
  size_t order = 0;
};

// The distinct-c-antisquare statistic bounded by `max_anti` in c-antisquare
// searches.  It is computed from the hole-free antisquare factors (`hf`) and
// the completions derived from hole-containing factors (`derived` distinct
// completions, `occurrences` one entry per factor):
//   - every distinct hole-free antisquare factor counts once;
//   - each hole letter whose derived completions include a word that never
//     occurs as a hole-free factor contributes one more ("novel" letters);
//   - derived completions beyond four that are novel contribute one each,
//     up to three;
//   - one penalty when some hole-free factor is re-derived by several
//     hole-containing factors and some re-derivation has order >= 2;
//   - one penalty when order-1 hole factors re-derive two distinct
//     hole-free factors.
size_t c_anti_statistic(const WordSet& hf, const WordSet& derived,
                        const std::vector<DerivedOcc>& occurrences) {
  size_t novel = 0;
  for (uint64_t k : derived.packed) {
    if (!hf.packed.count(k)) ++novel;
  }
  for (const std::string& k : derived.big) {
    if (!hf.big.count(k)) ++novel;
  }
  bool novel_letter[2] = {false, false};
  size_t dup_occurrences = 0;
  bool dup_order2 = false;
  std::unordered_set<uint64_t> dup_keys;
  std::set<std::string> dup_keys_big;
  std::unordered_set<uint64_t> order1_dup_keys;
  for (const DerivedOcc& occ : occurrences) {
    if (set_contains(hf, occ.key)) {
      ++dup_occurrences;
      if (occ.key.is_packed()) {
        dup_keys.insert(occ.key.packed);
      } else {
        dup_keys_big.insert(occ.key.big);
      }
      if (occ.order >= 2) {
        dup_order2 = true;
      } else {
        order1_dup_keys.insert(occ.key.packed);
      }
    } else {
      novel_letter[occ.hole_value] = true;
    }
  }
  size_t distinct_dups = dup_keys.size() + dup_keys_big.size();
  size_t count = hf.size();
  count += (novel_letter[0] ? 1 : 0) + (novel_letter[1] ? 1 : 0);
  if (dup_occurrences > distinct_dups && dup_order2) ++count;
  if (order1_dup_keys.size() >= 2) ++count;
  count += std::min<size_t>(novel > 4 ? novel - 4 : 0, 3);
  return count;
}

class Searcher {
 public:
  Searcher(const Budget& budget, size_t cutoff)
      : budget_(budget), cutoff_(cutoff) {}

  SearchOutcome run() {
    if (budget_.max_holes == 0) {
      best_ = 0;
      best_word_.clear();
    }
    if (cutoff_ > 0) descend();
    SearchOutcome out;
    out.nodes = nodes_;
    if (reached_cutoff_) {
      out.verdict = Verdict::kAtLeast;
      out.length = cutoff_;
    } else {
      out.verdict = Verdict::kExact;
      out.length = best_.value_or(0);
    }
    out.witness = to_word(best_word_);
    validate(out);
    return out;
  }

 private:
  // Tries every extension of the current word in symbol order 0 < 1 < hole.
  void descend() {
    for (int c = 0; c <= kHole; ++c) {
      if (c == kHole) {
        if (holes_ == budget_.max_holes) continue;
      } else if (c == 1 && !has_letter_) {
        continue;  // symmetry: the first non-hole letter is 0
      }
      push(c);
      pop(c);
    }
  }

  void push(int c) {
    w_.push_back(c);
    if (c == kHole) ++holes_;
    bool first_letter = c != kHole && !has_letter_;
    if (first_letter) has_letter_ = true;
    ++nodes_;
    Journal::Mark sq = square_journal_.mark();
    Journal::Mark an = anti_journal_.mark();
    Journal::Mark hf = hf_journal_.mark();
    Journal::Mark de = derived_journal_.mark();
    size_t occ = derived_list_.size();
    if (within_budget()) {
      if (holes_ == budget_.max_holes &&
          (!best_ || w_.size() > *best_)) {
        best_ = w_.size();
        best_word_ = w_;
      }
      if (w_.size() == cutoff_) {
        reached_cutoff_ = true;
      } else {
        descend();
      }
    }
    square_journal_.rewind(squares_, sq);
    anti_journal_.rewind(antis_, an);
    hf_journal_.rewind(hf_, hf);
    derived_journal_.rewind(derived_, de);
    derived_list_.resize(occ);
    if (first_letter) has_letter_ = false;
  }

  void pop(int c) {
    if (c == kHole) --holes_;
    w_.pop_back();
  }

  // Scans the factors ending at the last position, adds the repetitions
  // they witness to the distinct sets, and reports whether the budget
  // still holds.
  bool within_budget() {
    size_t len = w_.size();
    bool bounded_anti = budget_.max_anti != Budget::kUnbounded;
    bool c_anti = bounded_anti && budget_.anti_mode == AntiMode::kCAntisquare;
    for (size_t n = 1; 2 * n <= len; ++n) {
      size_t j = len - 2 * n;
      if (budget_.max_squares != Budget::kUnbounded &&
          !add_new_squares(j, n)) {
        return false;
      }
      if (bounded_anti) {
        if (budget_.anti_mode == AntiMode::kAntisquare) {
          if (!add_hole_free_anti(j, n)) return false;
        } else {
          record_c_anti(j, n);
        }
      }
    }
    // The c-antisquare statistic mixes growing and collapsing terms, so it
    // is evaluated once per extension instead of per insertion.
    return !c_anti ||
           c_anti_statistic(hf_, derived_, derived_list_) <= budget_.max_anti;
  }

  bool add_new_squares(size_t j, size_t n) {
    for (size_t i = 0; i < n; ++i) {
      if (!compat(w_[j + i], w_[j + n + i])) return true;
    }
    // Resolve the compatible full squares xx.  With at most one hole every
    // aligned pair has a letter, so x is unique; a pair of two holes leaves
    // a free binary choice.
    scratch_.clear();
    free_positions_.clear();
    for (size_t i = 0; i < n; ++i) {
      int u = w_[j + i], v = w_[j + n + i];
      int letter = u != kHole ? u : v;
      if (letter == kHole) free_positions_.push_back(i);
      scratch_.push_back(letter);
    }
    for (uint64_t choice = 0; choice < (uint64_t{1} << free_positions_.size());
         ++choice) {
      for (size_t k = 0; k < free_positions_.size(); ++k) {
        scratch_[free_positions_[k]] = static_cast<int>((choice >> k) & 1);
      }
      insert(squares_, square_journal_, make_key(scratch_, /*doubled=*/true));
      if (squares_.size() > budget_.max_squares) return false;
    }
    return true;
  }

  // Hole-free factor whose halves differ everywhere; the factor itself is
  // the counted full word.
  bool add_hole_free_anti(size_t j, size_t n) {
    scratch_.clear();
    for (size_t i = 0; i < 2 * n; ++i) {
      if (w_[j + i] == kHole) return true;
      scratch_.push_back(w_[j + i]);
    }
    for (size_t i = 0; i < n; ++i) {
      if (scratch_[i] == scratch_[n + i]) return true;
    }
    insert(antis_, anti_journal_, make_key(scratch_, /*doubled=*/false));
    return antis_.size() <= budget_.max_anti;
  }

  // Factor compatible with a full antisquare: hole-free occurrences join
  // the hole-free set, hole-containing ones record their completions.
  void record_c_anti(size_t j, size_t n) {
    for (size_t i = 0; i < n; ++i) {
      int u = w_[j + i], v = w_[j + n + i];
      if (u != kHole && v != kHole && u == v) return;
    }
    scratch_.clear();
    free_positions_.clear();
    size_t first_hole = 2 * n;
    for (size_t i = 0; i < 2 * n; ++i) {
      if (w_[j + i] == kHole) first_hole = std::min(first_hole, i);
      scratch_.push_back(w_[j + i]);
    }
    for (size_t i = 0; i < n; ++i) {
      int u = scratch_[i], v = scratch_[n + i];
      if (u == kHole && v == kHole) {
        free_positions_.push_back(i);
      } else if (u == kHole) {
        scratch_[i] = 1 - v;
      } else if (v == kHole) {
        scratch_[n + i] = 1 - u;
      }
    }
    if (first_hole == 2 * n) {
      insert(hf_, hf_journal_, make_key(scratch_, /*doubled=*/false));
      return;
    }
    for (uint64_t choice = 0; choice < (uint64_t{1} << free_positions_.size());
         ++choice) {
      for (size_t k = 0; k < free_positions_.size(); ++k) {
        size_t i = free_positions_[k];
        scratch_[i] = static_cast<int>((choice >> k) & 1);
        scratch_[n + i] = 1 - scratch_[i];
      }
      Key key = make_key(scratch_, /*doubled=*/false);
      insert(derived_, derived_journal_, key);
      derived_list_.push_back({key, scratch_[first_hole], n});
    }
  }

  // Builds the key of the full word in `symbols` (doubled: the word is xx
  // with x = symbols).
  static Key make_key(const std::vector<int>& symbols, bool doubled) {
    Key key;
    size_t total = doubled ? 2 * symbols.size() : symbols.size();
    if (total <= 62) {
      uint64_t bits = 0;
      for (size_t i = 0; i < symbols.size(); ++i) {
        bits |= static_cast<uint64_t>(symbols[i]) << i;
      }
      if (doubled) bits |= bits << symbols.size();
      key.packed = (uint64_t{1} << total) | bits;
    } else {
      key.big.reserve(total);
      for (int rep = 0; rep < (doubled ? 2 : 1); ++rep) {
        for (int s : symbols) key.big.push_back(static_cast<char>('0' + s));
      }
    }
    return key;
  }

  void insert(WordSet& set, Journal& journal, const Key& key) {
    if (key.is_packed()) {
      if (set.packed.insert(key.packed).second) {
        journal.packed.push_back(key.packed);
      }
    } else if (set.big.insert(key.big).second) {
      journal.big.push_back(key.big);
    }
  }

  PartialWord to_word(const std::vector<int>& codes) const {
    PartialWord out(2);
    for (int c : codes) {
      out.push_back(c == kHole ? Symbol::hole() : Symbol::letter(c));
    }
    return out;
  }

  // The outcome invariant: the witness satisfies the budget.  Squares and
  // plain antisquares are re-checked with the word-core counters; the
  // c-antisquare statistic is recomputed from scratch.
  void validate(const SearchOutcome& out) const {
    const PartialWord& w = out.witness;
    if (best_ && w.hole_count() != budget_.max_holes) {
      throw std::logic_error("search witness hole count mismatch");
    }
    if (budget_.max_squares != Budget::kUnbounded &&
        distinct_squares(w).size() > budget_.max_squares) {
      throw std::logic_error("search witness exceeds square budget");
    }
    if (budget_.max_anti != Budget::kUnbounded) {
      size_t count = budget_.anti_mode == AntiMode::kAntisquare
                         ? distinct_antisquares(w).size()
                         : c_anti_statistic_of(best_word_);
      if (count > budget_.max_anti) {
        throw std::logic_error("search witness exceeds anti budget");
      }
    }
  }

  Budget budget_;
  size_t cutoff_;
  std::vector<int> w_;
  size_t holes_ = 0;
  bool has_letter_ = false;
  WordSet squares_;
  WordSet antis_;
  WordSet hf_;
  WordSet derived_;
  std::vector<DerivedOcc> derived_list_;
  Journal square_journal_;
  Journal anti_journal_;
  Journal hf_journal_;
  Journal derived_journal_;
  std::vector<int> scratch_;
  std::vector<size_t> free_positions_;
  std::optional<size_t> best_;
  std::vector<int> best_word_;
  bool reached_cutoff_ = false;
  uint64_t nodes_ = 0;

 public:
  // Scratch recomputation of the c-antisquare statistic, independent of the
  // incremental bookkeeping; used to validate witnesses.
  static size_t c_anti_statistic_of(const std::vector<int>& w) {
    WordSet hf, derived;
    std::vector<DerivedOcc> occurrences;
    size_t len = w.size();
    for (size_t n = 1; 2 * n <= len; ++n) {
      for (size_t j = 0; j + 2 * n <= len; ++j) {
        bool anti = true;
        for (size_t i = 0; i < n && anti; ++i) {
          int u = w[j + i], v = w[j + n + i];
          if (u != kHole && v != kHole && u == v) anti = false;
        }
        if (!anti) continue;
        std::vector<int> f(w.begin() + j, w.begin() + j + 2 * n);
        std::vector<size_t> free_pos;
        size_t first_hole = 2 * n;
        for (size_t i = 0; i < 2 * n; ++i) {
          if (f[i] == kHole) first_hole = std::min(first_hole, i);
        }
        for (size_t i = 0; i < n; ++i) {
          if (f[i] == kHole && f[n + i] == kHole) {
            free_pos.push_back(i);
          } else if (f[i] == kHole) {
            f[i] = 1 - f[n + i];
          } else if (f[n + i] == kHole) {
            f[n + i] = 1 - f[i];
          }
        }
        if (first_hole == 2 * n) {
          Key key = make_key(f, false);
          if (key.is_packed()) {
            hf.packed.insert(key.packed);
          } else {
            hf.big.insert(key.big);
          }
          continue;
        }
        for (uint64_t choice = 0;
             choice < (uint64_t{1} << free_pos.size()); ++choice) {
          for (size_t k = 0; k < free_pos.size(); ++k) {
            size_t i = free_pos[k];
            f[i] = static_cast<int>((choice >> k) & 1);
            f[n + i] = 1 - f[i];
          }
          Key key = make_key(f, false);
          if (key.is_packed()) {
            derived.packed.insert(key.packed);
          } else {
            derived.big.insert(key.big);
          }
          occurrences.push_back({key, f[first_hole], n});
        }
      }
    }
    return c_anti_statistic(hf, derived, occurrences);
  }
};

}  // namespace

SearchOutcome longest(const Budget& budget, size_t cutoff) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be positive");
  return Searcher(budget, cutoff).run();
}

ClosedForms column_closed_forms(size_t a) {
  ClosedForms forms;
  forms.antisquare_b0 = 2 * a + 1;
  if (a >= 2) forms.antisquare_b1 = 4 * a - 1;
  forms.c_antisquare_b0 = 1;
  return forms;
}

size_t unconstrained_square_cap(int a) {
  if (a < 0 || a > 2) {
    throw std::invalid_argument(
        "only square budgets 0, 1, 2 have a finite unconstrained cap");
  }
  Budget budget;
  budget.max_squares = static_cast<size_t>(a);
  budget.max_anti = Budget::kUnbounded;
  budget.max_holes = 1;
  SearchOutcome out = longest(budget, 64);
  if (out.verdict != Verdict::kExact) {
    throw std::logic_error("unconstrained cap did not converge below cutoff");
  }
  return out.length;
}

}  // namespace pwrep
