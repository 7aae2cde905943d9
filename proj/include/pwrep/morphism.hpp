#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwrep/word.hpp"

namespace pwrep {

// Letter -> word map; codings are the width-1 case. Images may contain
// holes, the domain is hole-free unless a hole image is set.
class Morphism {
 public:
  Morphism(std::vector<PartialWord> images, int target_alphabet_size);

  // Parses "0->1100, 1->0112, 2->1010". With an explicit target
  // alphabet size, the digit equal to that size denotes the hole;
  // otherwise every digit is a letter.
  static Morphism parse(std::string_view text,
                        std::optional<int> target_alphabet_size = std::nullopt);

  int domain_size() const { return static_cast<int>(images_.size()); }
  int target_size() const { return target_alphabet_size_; }

  const PartialWord& image(int letter) const;
  const std::optional<PartialWord>& hole_image() const { return hole_image_; }
  void set_hole_image(PartialWord image);

  // Common image length, or nullopt for a non-uniform morphism.
  std::optional<size_t> uniform_width() const;

  bool is_coding() const { return uniform_width() == size_t{1}; }

  // image(letter) starts with letter and has length >= 2.
  bool prolongable_on(int letter) const;

  // Round-trips with parse; holes print as the target-size digit.
  std::string to_string() const;

 private:
  std::vector<PartialWord> images_;
  std::optional<PartialWord> hole_image_;
  int target_alphabet_size_;
};

// Concatenation of per-symbol images.
PartialWord apply(const Morphism& m, const PartialWord& w);

// First `length` symbols of m^ω(seed); requires hole-free images and
// prolongability on the seed.
PartialWord fixed_point_prefix(const Morphism& m, int seed, size_t length);

}  // namespace pwrep
