#include "pwrep/repetition.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pwrep {

namespace {

// Per-letter occupancy bitmaps; bit i of word i/64 is position i.
struct Masks {
  size_t len = 0;
  size_t words = 0;
  std::vector<std::vector<uint64_t>> letter;
  std::vector<uint64_t> nonhole;

  explicit Masks(const PartialWord& w)
      : len(w.size()),
        words(w.size() / 64 + 1),
        letter(w.alphabet_size(), std::vector<uint64_t>(words, 0)),
        nonhole(words, 0) {
    for (size_t i = 0; i < len; ++i) {
      Symbol s = w[i];
      if (s.is_letter()) {
        letter[s.index()][i / 64] |= uint64_t{1} << (i % 64);
        nonhole[i / 64] |= uint64_t{1} << (i % 64);
      }
    }
  }

  // 64 bits of `v` starting at bit position `from`; zero-padded.
  uint64_t window(const std::vector<uint64_t>& v, size_t from) const {
    size_t q = from / 64, r = from % 64;
    uint64_t lo = q < words ? v[q] : 0;
    if (r == 0) return lo;
    uint64_t hi = q + 1 < words ? v[q + 1] : 0;
    return (lo >> r) | (hi << (64 - r));
  }

  // "Both positions are letters and they differ" for (i, i+shift),
  // packed for positions 64*q .. 64*q+63.
  uint64_t pair_conflict(size_t q, size_t shift) const {
    size_t from = q * 64 + shift;
    uint64_t same = 0;
    for (const auto& bits : letter) {
      same |= bits[q] & window(bits, from);
    }
    return nonhole[q] & window(nonhole, from) & ~same;
  }

  // Antisquare violation at one offset: NOT (both letters and differ).
  // Binary alphabet.
  uint64_t pair_anti_conflict(size_t q, size_t shift) const {
    size_t from = q * 64 + shift;
    return ~((letter[0][q] & window(letter[1], from)) |
             (letter[1][q] & window(letter[0], from)));
  }
};

// Least p <= max_start such that positions [p, p+need) carry no
// conflict bit.  Single left-to-right sweep over 64-bit blocks tracking
// the start of the current zero run, so each order costs O(len/64)
// block evaluations regardless of conflict density.
//
// conflict(q) yields bits for positions 64q..64q+63; junk bits at
// positions >= max_start + need are masked off here.
std::optional<size_t> least_clean_window(
    const std::function<uint64_t(size_t)>& conflict, size_t need,
    size_t max_start) {
  size_t end = max_start + need;  // windows occupy positions < end
  size_t run_start = 0;           // least admissible window start so far
  size_t last_block = (end - 1) / 64;
  for (size_t q = 0; q <= last_block; ++q) {
    if (run_start > max_start) return std::nullopt;
    uint64_t bits = conflict(q);
    if (q == last_block && end % 64 != 0) {
      bits &= (uint64_t{1} << (end % 64)) - 1;
    }
    size_t base = q * 64;
    if (bits == 0) {
      if (std::min(base + 64, end) - run_start >= need) return run_start;
      continue;
    }
    if (need > 64) {
      // A window cannot fit between two conflicts of one block, so only
      // the run ending at the first conflict can complete here.
      size_t first = base + static_cast<size_t>(std::countr_zero(bits));
      if (first - run_start >= need) return run_start;
      run_start = base + 64 - static_cast<size_t>(std::countl_zero(bits));
    } else {
      while (bits != 0) {
        size_t c = base + static_cast<size_t>(std::countr_zero(bits));
        if (c - run_start >= need) return run_start;
        run_start = c + 1;
        bits &= bits - 1;
      }
      if (std::min(base + 64, end) - run_start >= need) return run_start;
    }
  }
  return std::nullopt;
}

struct ShiftScan {
  // For order n: window length, largest admissible start, and the
  // conflict-bit generator (junk past max_start + need is fine).
  size_t need;
  size_t max_start;
  std::function<uint64_t(size_t)> conflict;
};

// Builds the per-order scan for one repetition kind, or returns false
// when the order does not fit in the word.
using ScanFactory = std::function<bool(size_t n, ShiftScan&)>;

// Lexicographically least (start, order) over orders
// [min_order, max_order], narrowing by the best start found so far.
// Parallelises over orders for long words.
std::optional<Occurrence> scan_orders(size_t min_order, size_t max_order,
                                      RepetitionKind kind, size_t word_len,
                                      const ScanFactory& factory) {
  if (min_order > max_order) return std::nullopt;
  std::atomic<size_t> best_start{SIZE_MAX};

  auto scan_range = [&](size_t lo, size_t hi,
                        std::optional<Occurrence>& out) {
    for (size_t n = lo; n <= hi; ++n) {
      if (out && out->start == 0) break;
      ShiftScan scan;
      if (!factory(n, scan)) continue;
      // Equal starts stay admissible: a smaller order at the same
      // start can still win the lexicographic comparison.
      size_t bound = best_start.load(std::memory_order_relaxed);
      size_t limit = std::min(scan.max_start, bound);
      auto j = least_clean_window(scan.conflict, scan.need, limit);
      if (!j) continue;
      if (!out || *j < out->start) {
        out = Occurrence{*j, n, kind};
        size_t prev = best_start.load(std::memory_order_relaxed);
        while (prev > *j && !best_start.compare_exchange_weak(
                                prev, *j, std::memory_order_relaxed)) {
        }
      }
    }
  };

  size_t span = max_order - min_order + 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (word_len < 65536 || span < 64 || hw < 2) {
    std::optional<Occurrence> best;
    scan_range(min_order, max_order, best);
    return best;
  }

  unsigned nthreads = std::min<unsigned>(hw, 16);
  std::vector<std::optional<Occurrence>> results(nthreads);
  std::vector<std::thread> threads;
  size_t chunk = (span + nthreads - 1) / nthreads;
  for (unsigned t = 0; t < nthreads; ++t) {
    size_t lo = min_order + t * chunk;
    if (lo > max_order) break;
    size_t hi = std::min(max_order, lo + chunk - 1);
    threads.emplace_back(
        [&, lo, hi, t] { scan_range(lo, hi, results[t]); });
  }
  for (auto& th : threads) th.join();

  std::optional<Occurrence> best;
  for (const auto& r : results) {
    if (!r) continue;
    if (!best || r->start < best->start ||
        (r->start == best->start && r->order < best->order)) {
      best = r;
    }
  }
  return best;
}

void require_binary(const PartialWord& w, const char* what) {
  if (w.alphabet_size() != 2) {
    throw std::invalid_argument(std::string(what) +
                                " is only defined over a binary alphabet");
  }
}

// Enumerates, for each even-length factor, the full squares containing
// it; shared by the counting routines.
template <typename Sink>
void for_each_compatible_square(const PartialWord& w, size_t max_order,
                                Sink&& sink) {
  size_t len = w.size();
  int m = w.alphabet_size();
  size_t top = std::min(max_order, len / 2);
  for (size_t n = 1; n <= top; ++n) {
    for (size_t j = 0; j + 2 * n <= len; ++j) {
      std::vector<Symbol> x(n);
      std::vector<size_t> free_pos;
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) {
        Symbol a = w[j + i], b = w[j + n + i];
        if (a.is_letter() && b.is_letter()) {
          if (a != b) ok = false;
          x[i] = a;
        } else if (a.is_letter()) {
          x[i] = a;
        } else if (b.is_letter()) {
          x[i] = b;
        } else {
          x[i] = Symbol::hole();
          free_pos.push_back(i);
        }
      }
      if (!ok) continue;
      // Every assignment of the doubly-holed positions gives a square.
      std::vector<int> choice(free_pos.size(), 0);
      while (true) {
        for (size_t k = 0; k < free_pos.size(); ++k) {
          x[free_pos[k]] = Symbol::letter(choice[k]);
        }
        std::vector<Symbol> sq(x);
        sq.insert(sq.end(), x.begin(), x.end());
        sink(PartialWord(std::move(sq), m));
        size_t k = 0;
        while (k < choice.size() && ++choice[k] == m) choice[k++] = 0;
        if (k == choice.size()) break;
      }
    }
  }
}

}  // namespace

std::optional<Occurrence> find_square(const PartialWord& w, size_t min_order) {
  if (min_order == 0) throw std::invalid_argument("min_order must be >= 1");
  size_t len = w.size();
  if (len < 2 * min_order) return std::nullopt;
  Masks masks(w);
  ScanFactory factory = [&](size_t n, ShiftScan& scan) {
    if (2 * n > len) return false;
    scan.need = n;
    scan.max_start = len - 2 * n;
    scan.conflict = [&masks, n](size_t q) { return masks.pair_conflict(q, n); };
    return true;
  };
  return scan_orders(min_order, len / 2, RepetitionKind::kSquare, len,
                     factory);
}

std::optional<Occurrence> find_antisquare(const PartialWord& w,
                                          size_t min_order) {
  if (min_order == 0) throw std::invalid_argument("min_order must be >= 1");
  require_binary(w, "antisquare");
  size_t len = w.size();
  if (len < 2 * min_order) return std::nullopt;
  Masks masks(w);
  ScanFactory factory = [&](size_t n, ShiftScan& scan) {
    if (2 * n > len) return false;
    scan.need = n;
    scan.max_start = len - 2 * n;
    scan.conflict = [&masks, n](size_t q) {
      return masks.pair_anti_conflict(q, n);
    };
    return true;
  };
  return scan_orders(min_order, len / 2, RepetitionKind::kAntisquare, len,
                     factory);
}

std::optional<Occurrence> find_cube(const PartialWord& w, size_t min_order) {
  if (min_order == 0) throw std::invalid_argument("min_order must be >= 1");
  size_t len = w.size();
  if (len < 3 * min_order) return std::nullopt;
  Masks masks(w);
  ScanFactory factory = [&](size_t n, ShiftScan& scan) {
    if (3 * n > len) return false;
    scan.need = n;
    scan.max_start = len - 3 * n;
    scan.conflict = [&masks, n](size_t q) {
      // The three blocks share a letter at offset i unless some pair
      // of non-hole symbols differs.
      uint64_t conflict =
          masks.pair_conflict(q, n) | masks.pair_conflict(q, 2 * n);
      size_t from = q * 64 + n;
      uint64_t same = 0;
      for (const auto& bits : masks.letter) {
        same |= masks.window(bits, from) & masks.window(bits, from + n);
      }
      conflict |= masks.window(masks.nonhole, from) &
                  masks.window(masks.nonhole, from + n) & ~same;
      return conflict;
    };
    return true;
  };
  return scan_orders(min_order, len / 3, RepetitionKind::kCube, len, factory);
}

std::optional<Occurrence> find_nontrivial_square(const PartialWord& w) {
  size_t len = w.size();
  if (len < 2) return std::nullopt;
  // Order 1 first, skipping single-hole pairs; a position qualifying
  // at order 1 beats any longer order starting there.
  std::optional<Occurrence> order1;
  for (size_t j = 0; j + 2 <= len; ++j) {
    Symbol a = w[j], b = w[j + 1];
    if (!compatible(a, b)) continue;
    if (a.is_hole() != b.is_hole()) continue;  // trivial a-hole / hole-a
    order1 = Occurrence{j, 1, RepetitionKind::kSquare};
    break;
  }
  auto higher = find_square(w, 2);
  if (!order1) return higher;
  if (!higher) return order1;
  if (higher->start < order1->start) return higher;
  return order1;
}

std::optional<Occurrence> find_weak_overlap(const PartialWord& w) {
  size_t len = w.size();
  if (len < 3) return std::nullopt;
  // n = 1 needs the extra outer compatibility check.
  std::optional<Occurrence> small;
  for (size_t j = 0; j + 3 <= len; ++j) {
    if (compatible(w[j], w[j + 1]) && compatible(w[j + 1], w[j + 2]) &&
        compatible(w[j], w[j + 2])) {
      small = Occurrence{j, 1, RepetitionKind::kWeakOverlap};
      break;
    }
  }
  Masks masks(w);
  ScanFactory factory = [&](size_t n, ShiftScan& scan) {
    if (2 * n + 1 > len) return false;
    scan.need = n + 1;
    scan.max_start = len - 2 * n - 1;
    scan.conflict = [&masks, n](size_t q) { return masks.pair_conflict(q, n); };
    return true;
  };
  auto larger = scan_orders(2, (len - 1) / 2, RepetitionKind::kWeakOverlap,
                            len, factory);
  if (!small) return larger;
  if (larger && larger->start < small->start) return larger;
  return small;
}

std::set<PartialWord> distinct_squares(const PartialWord& w,
                                       size_t max_order) {
  std::set<PartialWord> out;
  for_each_compatible_square(
      w, max_order, [&](PartialWord sq) { out.insert(std::move(sq)); });
  return out;
}

std::set<PartialWord> distinct_antisquares(const PartialWord& w) {
  require_binary(w, "antisquare");
  std::set<PartialWord> out;
  size_t len = w.size();
  for (size_t n = 1; 2 * n <= len; ++n) {
    for (size_t j = 0; j + 2 * n <= len; ++j) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) {
        Symbol a = w[j + i], b = w[j + n + i];
        ok = a.is_letter() && b.is_letter() && a != b;
      }
      if (ok) out.insert(w.factor(j, 2 * n));
    }
  }
  return out;
}

std::set<PartialWord> distinct_c_antisquares(const PartialWord& w) {
  require_binary(w, "c-antisquare");
  std::set<PartialWord> out;
  size_t len = w.size();
  for (size_t n = 1; 2 * n <= len; ++n) {
    for (size_t j = 0; j + 2 * n <= len; ++j) {
      // First half of the compatible antisquare; the second half is
      // its complement. Doubly-holed offsets are free.
      std::vector<Symbol> x(n);
      std::vector<size_t> free_pos;
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) {
        Symbol a = w[j + i], b = w[j + n + i];
        if (a.is_letter() && b.is_letter()) {
          if (a == b) ok = false;
          x[i] = a;
        } else if (a.is_letter()) {
          x[i] = a;
        } else if (b.is_letter()) {
          x[i] = Symbol::letter(1 - b.index());
        } else {
          x[i] = Symbol::hole();
          free_pos.push_back(i);
        }
      }
      if (!ok) continue;
      size_t combos = size_t{1} << free_pos.size();
      for (size_t mask = 0; mask < combos; ++mask) {
        std::vector<Symbol> u(2 * n);
        for (size_t i = 0; i < n; ++i) u[i] = x[i];
        for (size_t k = 0; k < free_pos.size(); ++k) {
          u[free_pos[k]] = Symbol::letter((mask >> k) & 1);
        }
        for (size_t i = 0; i < n; ++i) {
          u[n + i] = Symbol::letter(1 - u[i].index());
        }
        out.insert(PartialWord(std::move(u), 2));
      }
    }
  }
  return out;
}

std::optional<size_t> hole_sparsity(const PartialWord& w) {
  size_t longest_run = 0, run = 0;
  bool any_hole = false;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_hole()) {
      any_hole = true;
      run = 0;
    } else {
      longest_run = std::max(longest_run, ++run);
    }
  }
  if (!any_hole) return std::nullopt;
  return longest_run + 1;
}

bool has_weak_period(const PartialWord& w, size_t p) {
  if (p == 0) throw std::invalid_argument("period must be >= 1");
  for (size_t i = 0; i + p < w.size(); ++i) {
    if (!compatible(w[i], w[i + p])) return false;
  }
  return true;
}

bool has_strong_period(const PartialWord& w, size_t p) {
  if (p == 0) throw std::invalid_argument("period must be >= 1");
  // Pairwise compatibility inside a residue class means all non-hole
  // symbols in the class are equal.
  std::vector<Symbol> seen(p, Symbol::hole());
  for (size_t i = 0; i < w.size(); ++i) {
    Symbol s = w[i];
    if (s.is_hole()) continue;
    Symbol& rep = seen[i % p];
    if (rep.is_hole()) {
      rep = s;
    } else if (rep != s) {
      return false;
    }
  }
  return true;
}

}  // namespace pwrep
