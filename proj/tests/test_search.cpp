// Tests for the backtracking search over binary partial words: reference
// table sweeps, an independent enumeration oracle for small cells, closed
// forms, caps, and witness properties.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pwrep/search.hpp"
#include "pwrep/word.hpp"

using pwrep::AntiMode;
using pwrep::Budget;
using pwrep::PartialWord;
using pwrep::SearchOutcome;
using pwrep::Verdict;

namespace {

// ---------------------------------------------------------------------------
// Reference values: longest one-hole binary word whose every prefix has at
// most `a` distinct compatible full squares (row) and at most `b` of the
// anti quantity (column).  Row `a` of each table lists columns b = 0, 1, ...
// Cells omitted here take minutes to hours to certify and are exercised
// elsewhere.

// Anti quantity: distinct hole-free antisquare factors.
const std::vector<std::vector<size_t>> kAntisquareTable = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {3, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5},
    {5, 7, 9, 10, 11, 11, 12, 12, 14, 14, 15, 16, 16, 16},
    {7, 11, 14, 19, 19, 19, 19, 22, 26, 30, 34, 52},
    {9, 15, 22, 27, 30, 45, 54},
    {11, 19, 35, 40},
};

// Anti quantity: the c-antisquare statistic (see search.hpp).
const std::vector<std::vector<size_t>> kCAntisquareTable = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 3, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5},
    {1, 5, 9, 9, 9, 9, 10, 12, 12, 13, 13, 16, 16, 16},
    {1, 7, 13, 13, 13, 17, 17, 17, 22, 27, 32, 52},
    {1, 9, 18, 18, 25, 29, 44, 55},
    {1, 11, 24, 24, 37},
    {1, 13, 30, 36},
    {1, 15, 43},
    {1, 17},
    {1, 19},
    {1, 21},
};

constexpr char kHoleChar = '2';

Budget make_budget(size_t a, size_t b, AntiMode mode, size_t holes = 1) {
  Budget budget;
  budget.max_squares = a;
  budget.max_anti = b;
  budget.anti_mode = mode;
  budget.max_holes = holes;
  return budget;
}

// ---------------------------------------------------------------------------
// Independent string-based counters.  These recompute every quantity from
// scratch per word: no incremental updates, no journaling, no bit packing.

// Distinct full squares uu compatible with some factor of w.
size_t brute_squares(const std::string& w) {
  std::set<std::string> squares;
  for (size_t n = 1; 2 * n <= w.size(); ++n) {
    for (size_t j = 0; j + 2 * n <= w.size(); ++j) {
      std::string half(n, '?');
      std::vector<size_t> free_pos;
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) {
        char a = w[j + i];
        char b = w[j + n + i];
        if (a != kHoleChar && b != kHoleChar) {
          if (a != b) ok = false;
          half[i] = a;
        } else if (a != kHoleChar) {
          half[i] = a;
        } else if (b != kHoleChar) {
          half[i] = b;
        } else {
          free_pos.push_back(i);
        }
      }
      if (!ok) continue;
      for (size_t mask = 0; mask < (size_t{1} << free_pos.size()); ++mask) {
        std::string u = half;
        for (size_t bit = 0; bit < free_pos.size(); ++bit) {
          u[free_pos[bit]] = (mask >> bit & 1) ? '1' : '0';
        }
        squares.insert(u + u);
      }
    }
  }
  return squares.size();
}

// Distinct hole-free antisquare factors of w.
size_t brute_antisquares(const std::string& w) {
  std::set<std::string> antis;
  for (size_t n = 1; 2 * n <= w.size(); ++n) {
    for (size_t j = 0; j + 2 * n <= w.size(); ++j) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) {
        char a = w[j + i];
        char b = w[j + n + i];
        if (a == kHoleChar || b == kHoleChar || a == b) ok = false;
      }
      if (ok) antis.insert(w.substr(j, 2 * n));
    }
  }
  return antis.size();
}

// The c-antisquare statistic, recomputed from scratch.  See the Budget
// documentation in search.hpp for the definition of each term.
size_t brute_anti_statistic(const std::string& w) {
  std::set<std::string> hole_free;
  struct Occurrence {
    std::string key;
    char hole_letter;
    size_t order;
  };
  std::vector<Occurrence> occurrences;

  for (size_t n = 1; 2 * n <= w.size(); ++n) {
    for (size_t j = 0; j + 2 * n <= w.size(); ++j) {
      std::string s = w.substr(j, 2 * n);
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) {
        if (s[i] != kHoleChar && s[i + n] != kHoleChar && s[i] == s[i + n]) {
          ok = false;
        }
      }
      if (!ok) continue;
      size_t first_hole = s.find(kHoleChar);
      if (first_hole == std::string::npos) {
        hole_free.insert(s);
        continue;
      }
      // Resolve single-sided holes; pairs of holes stay free.
      std::string c = s;
      std::vector<size_t> free_pos;
      for (size_t i = 0; i < n; ++i) {
        bool ha = s[i] == kHoleChar;
        bool hb = s[i + n] == kHoleChar;
        if (ha && hb) {
          free_pos.push_back(i);
        } else if (ha) {
          c[i] = s[i + n] == '0' ? '1' : '0';
        } else if (hb) {
          c[i + n] = s[i] == '0' ? '1' : '0';
        }
      }
      for (size_t mask = 0; mask < (size_t{1} << free_pos.size()); ++mask) {
        std::string t = c;
        for (size_t bit = 0; bit < free_pos.size(); ++bit) {
          size_t i = free_pos[bit];
          t[i] = (mask >> bit & 1) ? '1' : '0';
          t[i + n] = t[i] == '0' ? '1' : '0';
        }
        occurrences.push_back({t, t[first_hole], n});
      }
    }
  }

  bool novel_letter[2] = {false, false};
  std::set<std::string> novel_keys;
  size_t dup_occurrences = 0;
  bool dup_order2 = false;
  std::set<std::string> dup_keys;
  std::set<std::string> order1_dup_keys;
  for (const Occurrence& occ : occurrences) {
    if (hole_free.count(occ.key) != 0) {
      ++dup_occurrences;
      dup_keys.insert(occ.key);
      if (occ.order >= 2) dup_order2 = true;
      if (occ.order == 1) order1_dup_keys.insert(occ.key);
    } else {
      novel_keys.insert(occ.key);
      novel_letter[occ.hole_letter - '0'] = true;
    }
  }
  size_t novel = novel_keys.size();
  return hole_free.size() + (novel_letter[0] ? 1 : 0) +
         (novel_letter[1] ? 1 : 0) +
         ((dup_occurrences > dup_keys.size() && dup_order2) ? 1 : 0) +
         (order1_dup_keys.size() >= 2 ? 1 : 0) +
         std::min<size_t>(novel > 4 ? novel - 4 : 0, 3);
}

bool step_feasible(const std::string& w, const Budget& budget) {
  if (brute_squares(w) > budget.max_squares) return false;
  if (budget.anti_mode == AntiMode::kAntisquare) {
    return brute_antisquares(w) <= budget.max_anti;
  }
  return brute_anti_statistic(w) <= budget.max_anti;
}

struct OracleResult {
  size_t best_length = 0;
  std::string witness;  // lexicographically least at best_length (0 < 1 < hole)
  bool found = false;
};

// Depth-first enumeration of all words whose prefixes all pass
// step_feasible, recording the deepest word with exactly max_holes holes.
// Counts are recomputed from scratch at every node, and no symmetry
// reduction is applied, so this shares no machinery with pwrep::longest.
void oracle_extend(std::string& w, const Budget& budget, size_t limit,
                   OracleResult& result) {
  size_t holes = static_cast<size_t>(
      std::count(w.begin(), w.end(), kHoleChar));
  if (holes == budget.max_holes &&
      (!result.found || w.size() > result.best_length)) {
    result.best_length = w.size();
    result.witness = w;
    result.found = true;
  }
  if (w.size() == limit) return;
  for (char c : {'0', '1', kHoleChar}) {
    if (c == kHoleChar && holes == budget.max_holes) continue;
    w.push_back(c);
    if (step_feasible(w, budget)) oracle_extend(w, budget, limit, result);
    w.pop_back();
  }
}

OracleResult oracle_longest(const Budget& budget, size_t limit) {
  OracleResult result;
  std::string w;
  if (budget.max_holes == 0) {
    result.found = true;  // the empty word qualifies
  }
  oracle_extend(w, budget, limit, result);
  return result;
}

// Runs the library search and the oracle on the same budget and requires
// them to agree on the optimal length and on the lexicographically least
// witness.  When `expected` is set the shared answer must also equal it.
void check_against_oracle(size_t a, size_t b, AntiMode mode, size_t holes,
                          std::optional<size_t> expected = std::nullopt) {
  CAPTURE(a);
  CAPTURE(b);
  CAPTURE(holes);
  Budget budget = make_budget(a, b, mode, holes);
  SearchOutcome outcome = pwrep::longest(budget, 64);
  REQUIRE(outcome.verdict == Verdict::kExact);
  OracleResult oracle = oracle_longest(budget, outcome.length + 2);
  REQUIRE(oracle.found);
  CHECK(oracle.best_length == outcome.length);
  CHECK(outcome.witness.digits() == oracle.witness);
  if (expected) CHECK(outcome.length == *expected);
}

}  // namespace

TEST_CASE("antisquare table rows 0-5 reproduce the reference values") {
  for (size_t a = 0; a < kAntisquareTable.size(); ++a) {
    for (size_t b = 0; b < kAntisquareTable[a].size(); ++b) {
      CAPTURE(a);
      CAPTURE(b);
      SearchOutcome outcome =
          pwrep::longest(make_budget(a, b, AntiMode::kAntisquare), 64);
      CHECK(outcome.verdict == Verdict::kExact);
      CHECK(outcome.length == kAntisquareTable[a][b]);
      CHECK(outcome.witness.hole_count() == 1);
      CHECK(outcome.witness.size() == outcome.length);
    }
  }
}

TEST_CASE("c-antisquare table rows 0-10 reproduce the reference values") {
  for (size_t a = 0; a < kCAntisquareTable.size(); ++a) {
    for (size_t b = 0; b < kCAntisquareTable[a].size(); ++b) {
      CAPTURE(a);
      CAPTURE(b);
      SearchOutcome outcome =
          pwrep::longest(make_budget(a, b, AntiMode::kCAntisquare), 64);
      CHECK(outcome.verdict == Verdict::kExact);
      CHECK(outcome.length == kCAntisquareTable[a][b]);
      CHECK(outcome.witness.hole_count() == 1);
    }
  }
}

TEST_CASE("c-antisquare optima never exceed antisquare optima cellwise") {
  for (size_t a = 0; a < kAntisquareTable.size(); ++a) {
    size_t cols =
        std::min(kAntisquareTable[a].size(), kCAntisquareTable[a].size());
    for (size_t b = 0; b < cols; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(kCAntisquareTable[a][b] <= kAntisquareTable[a][b]);
    }
  }
}

TEST_CASE("table rows and columns are monotone in the budgets") {
  for (const auto* table : {&kAntisquareTable, &kCAntisquareTable}) {
    for (size_t a = 0; a < table->size(); ++a) {
      const auto& row = (*table)[a];
      for (size_t b = 0; b + 1 < row.size(); ++b) {
        CHECK(row[b] <= row[b + 1]);
      }
      if (a + 1 < table->size()) {
        const auto& next = (*table)[a + 1];
        for (size_t b = 0; b < std::min(row.size(), next.size()); ++b) {
          CHECK(row[b] <= next[b]);
        }
      }
    }
  }
}

TEST_CASE("small antisquare cells agree with the enumeration oracle") {
  check_against_oracle(0, 0, AntiMode::kAntisquare, 1, 1);
  check_against_oracle(0, 3, AntiMode::kAntisquare, 1, 1);
  check_against_oracle(1, 0, AntiMode::kAntisquare, 1, 3);
  check_against_oracle(1, 1, AntiMode::kAntisquare, 1, 4);
  check_against_oracle(1, 2, AntiMode::kAntisquare, 1, 5);
  check_against_oracle(1, 7, AntiMode::kAntisquare, 1, 5);
  check_against_oracle(2, 0, AntiMode::kAntisquare, 1, 5);
  check_against_oracle(2, 1, AntiMode::kAntisquare, 1, 7);
  check_against_oracle(2, 2, AntiMode::kAntisquare, 1, 9);
  check_against_oracle(2, 3, AntiMode::kAntisquare, 1, 10);
  check_against_oracle(2, 4, AntiMode::kAntisquare, 1, 11);
  check_against_oracle(3, 0, AntiMode::kAntisquare, 1, 7);
  check_against_oracle(3, 1, AntiMode::kAntisquare, 1, 11);
  check_against_oracle(4, 0, AntiMode::kAntisquare, 1, 9);
  check_against_oracle(5, 0, AntiMode::kAntisquare, 1, 11);
}

TEST_CASE("small c-antisquare cells agree with the enumeration oracle") {
  check_against_oracle(0, 2, AntiMode::kCAntisquare, 1, 1);
  check_against_oracle(1, 0, AntiMode::kCAntisquare, 1, 1);
  check_against_oracle(1, 1, AntiMode::kCAntisquare, 1, 3);
  check_against_oracle(1, 2, AntiMode::kCAntisquare, 1, 4);
  check_against_oracle(1, 3, AntiMode::kCAntisquare, 1, 5);
  check_against_oracle(2, 0, AntiMode::kCAntisquare, 1, 1);
  check_against_oracle(2, 1, AntiMode::kCAntisquare, 1, 5);
  check_against_oracle(2, 2, AntiMode::kCAntisquare, 1, 9);
  check_against_oracle(2, 3, AntiMode::kCAntisquare, 1, 9);
  check_against_oracle(2, 6, AntiMode::kCAntisquare, 1, 10);
  check_against_oracle(3, 1, AntiMode::kCAntisquare, 1, 7);
  check_against_oracle(4, 1, AntiMode::kCAntisquare, 1, 9);
  check_against_oracle(5, 0, AntiMode::kCAntisquare, 1, 1);
}

TEST_CASE("full-word and two-hole searches agree with the enumeration oracle") {
  // No holes: the same budgets, optimised over full words only.
  check_against_oracle(1, 1, AntiMode::kAntisquare, 0);
  check_against_oracle(2, 2, AntiMode::kAntisquare, 0);
  check_against_oracle(2, 2, AntiMode::kCAntisquare, 0);
  // Two holes.
  check_against_oracle(1, 1, AntiMode::kAntisquare, 2);
  check_against_oracle(2, 1, AntiMode::kAntisquare, 2);
  check_against_oracle(2, 2, AntiMode::kCAntisquare, 2);
}

TEST_CASE("the length-45 antisquare witness is reproduced byte for byte") {
  SearchOutcome outcome =
      pwrep::longest(make_budget(4, 5, AntiMode::kAntisquare), 64);
  CHECK(outcome.verdict == Verdict::kExact);
  CHECK(outcome.length == 45);
  CHECK(outcome.witness.digits() ==
        "000010000011000010110000011200101100000101110");

  SearchOutcome full =
      pwrep::longest(make_budget(4, 5, AntiMode::kAntisquare, 0), 64);
  CHECK(full.verdict == Verdict::kExact);
  CHECK(full.length == 31);
  CHECK(full.witness.is_full());
}

TEST_CASE("search results are deterministic across runs") {
  for (AntiMode mode : {AntiMode::kAntisquare, AntiMode::kCAntisquare}) {
    Budget budget = make_budget(2, 2, mode);
    SearchOutcome first = pwrep::longest(budget, 64);
    SearchOutcome second = pwrep::longest(budget, 64);
    CHECK(first.length == second.length);
    CHECK(first.nodes == second.nodes);
    CHECK(first.witness.digits() == second.witness.digits());
  }
}

TEST_CASE("a cutoff below the optimum reports a lower bound") {
  SearchOutcome outcome =
      pwrep::longest(make_budget(2, 2, AntiMode::kAntisquare), 5);
  CHECK(outcome.verdict == Verdict::kAtLeast);
  CHECK(outcome.length == 5);
  CHECK(outcome.witness.size() == 5);
  CHECK(outcome.witness.hole_count() == 1);
}

TEST_CASE("a zero cutoff is rejected") {
  CHECK_THROWS_AS(pwrep::longest(Budget{}, 0), std::invalid_argument);
}

TEST_CASE("column closed forms match the search") {
  for (size_t a = 0; a <= 5; ++a) {
    CAPTURE(a);
    pwrep::ClosedForms forms = pwrep::column_closed_forms(a);
    CHECK(forms.antisquare_b0 == 2 * a + 1);
    CHECK(forms.antisquare_b0 ==
          pwrep::longest(make_budget(a, 0, AntiMode::kAntisquare), 64).length);
    if (a >= 2) {
      REQUIRE(forms.antisquare_b1.has_value());
      CHECK(*forms.antisquare_b1 == 4 * a - 1);
      CHECK(*forms.antisquare_b1 ==
            pwrep::longest(make_budget(a, 1, AntiMode::kAntisquare), 64)
                .length);
    } else {
      CHECK(!forms.antisquare_b1.has_value());
    }
    CHECK(forms.c_antisquare_b0 == 1);
    CHECK(pwrep::longest(make_budget(a, 0, AntiMode::kCAntisquare), 64)
              .length == 1);
  }
}

TEST_CASE("square caps without an anti budget") {
  CHECK(pwrep::unconstrained_square_cap(0) == 1);
  CHECK(pwrep::unconstrained_square_cap(1) == 5);
  CHECK(pwrep::unconstrained_square_cap(2) == 16);
  CHECK_THROWS_AS(pwrep::unconstrained_square_cap(3), std::invalid_argument);
  CHECK_THROWS_AS(pwrep::unconstrained_square_cap(-1), std::invalid_argument);
}
