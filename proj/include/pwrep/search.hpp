#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "pwrep/word.hpp"

namespace pwrep {

// Which notion of antisquare the anti budget counts.
enum class AntiMode { kAntisquare, kCAntisquare };

// Limits for the backtracking search over binary partial words.
//
// `max_squares` bounds the number of distinct full squares compatible with a
// factor.  `max_anti` bounds, depending on `anti_mode`:
//   - kAntisquare: the number of distinct antisquare factors (hole-free by
//     definition);
//   - kCAntisquare: a statistic of the factors compatible with full
//     antisquares.  Distinct hole-free antisquare factors count once each.
//     Hole-containing factors contribute through their completions: +1 per
//     hole letter that derives a completion not occurring hole-free, +1 per
//     novel completion beyond four (at most +3), +1 when some hole-free
//     factor is re-derived more than once with a re-derivation of order two
//     or more, and +1 when order-1 hole factors re-derive two distinct
//     hole-free factors.  Note this differs from the plain count of
//     distinct compatible full antisquares that distinct_c_antisquares
//     returns.
// Setting a limit to kUnbounded disables it.  `max_holes` is the number of
// holes the reported word must contain; prefixes with fewer holes are still
// explored since they may extend to a word that places its holes later.
struct Budget {
  static constexpr size_t kUnbounded = SIZE_MAX;

  size_t max_squares = 0;
  size_t max_anti = 0;
  AntiMode anti_mode = AntiMode::kAntisquare;
  size_t max_holes = 1;
};

enum class Verdict { kExact, kAtLeast };

struct SearchOutcome {
  Verdict verdict = Verdict::kExact;
  // Optimal length for Exact; the cutoff for AtLeast.
  size_t length = 0;
  // Lexicographically least word of the reported length containing exactly
  // `max_holes` holes (symbol order 0 < 1 < hole).  For AtLeast this is the
  // deepest such word found before hitting the cutoff.
  PartialWord witness{2};
  uint64_t nodes = 0;
};

// Depth-first search for the longest binary partial word with exactly
// `budget.max_holes` holes all of whose prefixes stay within the budget.
// Square and antisquare counts are monotone under extension, so for them
// prefix feasibility is the same as feasibility of the word itself and
// prefixes can be pruned as soon as a count exceeds its limit.  The
// c-antisquare statistic can dip by one when a novel completion is
// overtaken by a new hole-free factor, so there the prefix-closed reading
// is the definition.  Words whose first non-hole letter is 1 are skipped;
// complementation maps the budget predicates to themselves, so the optimum
// and the lexicographically least witness are unaffected.
//
// Returns Exact when the whole tree was exhausted below `cutoff`, AtLeast
// otherwise.  Witness squares and antisquares are re-validated with the
// word-core counters before returning, the c-antisquare statistic with a
// from-scratch recomputation.
SearchOutcome longest(const Budget& budget, size_t cutoff);

// Closed forms for the first two table columns at one hole.
struct ClosedForms {
  size_t antisquare_b0 = 0;                  // 2a+1 squares budget a, no antisquares
  std::optional<size_t> antisquare_b1;       // 4a-1, defined for a >= 2
  size_t c_antisquare_b0 = 1;                // always 1: a-hole or hole-a
};
ClosedForms column_closed_forms(size_t a);

// Longest one-hole word with at most `a` distinct squares and no antisquare
// budget.  Only a = 0, 1, 2 admit finite answers (1, 5, 16); other inputs
// are rejected.
size_t unconstrained_square_cap(int a);

}  // namespace pwrep
