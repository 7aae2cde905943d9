#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pwrep {

// A letter 0..N-1 of some alphabet, or the wildcard hole.
class Symbol {
 public:
  constexpr Symbol() : code_(-1) {}

  static constexpr Symbol hole() { return Symbol(); }
  static constexpr Symbol letter(int index) {
    return Symbol(static_cast<int8_t>(index));
  }

  constexpr bool is_hole() const { return code_ < 0; }
  constexpr bool is_letter() const { return code_ >= 0; }

  // Letter index, -1 for the hole.
  constexpr int index() const { return code_; }

  // Sort key with letters first, the hole last (0 < 1 < ... < hole).
  constexpr int order_key() const { return code_ < 0 ? 0x7f : code_; }

  friend constexpr bool operator==(Symbol, Symbol) = default;

 private:
  explicit constexpr Symbol(int8_t code) : code_(code) {}
  int8_t code_;
};

// Two symbols agree up to holes.
constexpr bool compatible(Symbol a, Symbol b) {
  return a.is_hole() || b.is_hole() || a == b;
}

// Finite word over {0..alphabet_size-1} plus the hole. A word without
// holes is a full word.
class PartialWord {
 public:
  explicit PartialWord(int alphabet_size = 2);
  PartialWord(std::vector<Symbol> symbols, int alphabet_size);

  // Parses the digit convention (hole written as the digit equal to
  // alphabet_size) and the human convention ('.' or U+25C7 for holes).
  // Without an explicit alphabet size, holes must use the human
  // convention and the alphabet is inferred from the largest digit
  // (at least binary).
  static PartialWord parse(std::string_view text,
                           std::optional<int> alphabet_size = std::nullopt);

  size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](size_t i) const { return symbols_[i]; }

  int alphabet_size() const { return alphabet_size_; }
  size_t hole_count() const;
  bool is_full() const { return hole_count() == 0; }

  void push_back(Symbol s);
  void pop_back();

  PartialWord factor(size_t pos, size_t len) const;
  PartialWord prefix(size_t len) const { return factor(0, len); }

  const std::vector<Symbol>& symbols() const { return symbols_; }

  // Walnut digit form: hole printed as the digit alphabet_size.
  std::string digits() const;
  // Human form with a configurable hole character.
  std::string pretty(char hole_char = '.') const;

  friend bool operator==(const PartialWord&, const PartialWord&) = default;

  // Shortlex with letters ordered before the hole.
  friend bool operator<(const PartialWord& a, const PartialWord& b);

 private:
  std::vector<Symbol> symbols_;
  int alphabet_size_;
};

// |u| = |v| and pointwise agreement up to holes.
bool compatible(const PartialWord& u, const PartialWord& v);

// Every non-hole position of w equals u (same length).
bool contained_in(const PartialWord& w, const PartialWord& u);

}  // namespace pwrep
