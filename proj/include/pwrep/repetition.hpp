#pragma once

#include <cstddef>
#include <optional>
#include <set>

#include "pwrep/word.hpp"

namespace pwrep {

enum class RepetitionKind {
  kSquare,
  kAntisquare,
  kCAntisquare,
  kCube,
  kWeakOverlap,
};

struct Occurrence {
  size_t start = 0;   // j
  size_t order = 0;   // n
  RepetitionKind kind = RepetitionKind::kSquare;

  // Total length of the factor witnessing the occurrence.
  size_t span() const {
    switch (kind) {
      case RepetitionKind::kCube:
        return 3 * order;
      case RepetitionKind::kWeakOverlap:
        return 2 * order + 1;
      default:
        return 2 * order;
    }
  }

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// All finders return the occurrence with least start, then least order,
// or nullopt when the word avoids the pattern.

// Partial-word square: for all i < n, w[j+i] and w[j+n+i] agree or one
// of them is a hole.
std::optional<Occurrence> find_square(const PartialWord& w,
                                      size_t min_order = 1);

// Hole-free factor whose halves differ at every position. Binary only.
std::optional<Occurrence> find_antisquare(const PartialWord& w,
                                          size_t min_order = 1);

// Factor whose three blocks share a common letter at every offset.
std::optional<Occurrence> find_cube(const PartialWord& w,
                                    size_t min_order = 1);

// Like find_square(w, 1) but skipping order-1 occurrences with exactly
// one hole (a-hole / hole-a). A double hole still counts.
std::optional<Occurrence> find_nontrivial_square(const PartialWord& w);

// Factor of length 2n+1 with weak period n; for n = 1 the outer symbols
// must also be compatible.
std::optional<Occurrence> find_weak_overlap(const PartialWord& w);

// Full squares xx compatible with some factor of w, optionally
// restricted to |x| <= max_order.
std::set<PartialWord> distinct_squares(const PartialWord& w,
                                       size_t max_order = SIZE_MAX);

// Hole-free antisquare factors of w, as distinct words. Binary only.
std::set<PartialWord> distinct_antisquares(const PartialWord& w);

// Full antisquares compatible with some factor of w. Binary only.
std::set<PartialWord> distinct_c_antisquares(const PartialWord& w);

// Smallest s such that every length-s factor contains a hole; nullopt
// for a hole-free word.
std::optional<size_t> hole_sparsity(const PartialWord& w);

// w[i] compatible with w[i+p] for all valid i.
bool has_weak_period(const PartialWord& w, size_t p);

// w[i] compatible with w[j] whenever i = j (mod p).
bool has_strong_period(const PartialWord& w, size_t p);

}  // namespace pwrep
