#include "pwrep/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace pwrep {

namespace {

void check_symbol(Symbol s, int alphabet_size) {
  if (s.is_letter() && s.index() >= alphabet_size) {
    throw std::invalid_argument("letter index " + std::to_string(s.index()) +
                                " outside alphabet of size " +
                                std::to_string(alphabet_size));
  }
}

}  // namespace

PartialWord::PartialWord(int alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size < 1) {
    throw std::invalid_argument("alphabet size must be positive");
  }
}

PartialWord::PartialWord(std::vector<Symbol> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size < 1) {
    throw std::invalid_argument("alphabet size must be positive");
  }
  for (Symbol s : symbols_) check_symbol(s, alphabet_size_);
}

PartialWord PartialWord::parse(std::string_view text,
                               std::optional<int> alphabet_size) {
  std::vector<Symbol> syms;
  int max_digit = -1;
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '.') {
      syms.push_back(Symbol::hole());
    } else if (c == 0xe2 && i + 2 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0x97 &&
               static_cast<unsigned char>(text[i + 2]) == 0x87) {
      // U+25C7 white diamond
      syms.push_back(Symbol::hole());
      i += 2;
    } else if (c >= '0' && c <= '9') {
      int d = c - '0';
      max_digit = std::max(max_digit, d);
      if (alphabet_size && d == *alphabet_size) {
        syms.push_back(Symbol::hole());
      } else {
        syms.push_back(Symbol::letter(d));
      }
    } else if (c == ' ' || c == '\t') {
      continue;
    } else {
      throw std::invalid_argument("bad character in word: '" +
                                  std::string(1, text[i]) + "'");
    }
  }
  int size = alphabet_size ? *alphabet_size : std::max(2, max_digit + 1);
  return PartialWord(std::move(syms), size);
}

size_t PartialWord::hole_count() const {
  return static_cast<size_t>(
      std::count_if(symbols_.begin(), symbols_.end(),
                    [](Symbol s) { return s.is_hole(); }));
}

void PartialWord::push_back(Symbol s) {
  check_symbol(s, alphabet_size_);
  symbols_.push_back(s);
}

void PartialWord::pop_back() { symbols_.pop_back(); }

PartialWord PartialWord::factor(size_t pos, size_t len) const {
  if (pos + len > symbols_.size()) {
    throw std::out_of_range("factor outside word");
  }
  return PartialWord(
      std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len),
      alphabet_size_);
}

std::string PartialWord::digits() const {
  if (alphabet_size_ > 9) {
    throw std::invalid_argument("digit form needs alphabet size <= 9");
  }
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    out.push_back(static_cast<char>(
        '0' + (s.is_hole() ? alphabet_size_ : s.index())));
  }
  return out;
}

std::string PartialWord::pretty(char hole_char) const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    out.push_back(s.is_hole() ? hole_char
                              : static_cast<char>('0' + s.index()));
  }
  return out;
}

bool operator<(const PartialWord& a, const PartialWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int ka = a[i].order_key(), kb = b[i].order_key();
    if (ka != kb) return ka < kb;
  }
  return false;
}

bool compatible(const PartialWord& u, const PartialWord& v) {
  if (u.size() != v.size()) return false;
  for (size_t i = 0; i < u.size(); ++i) {
    if (!compatible(u[i], v[i])) return false;
  }
  return true;
}

bool contained_in(const PartialWord& w, const PartialWord& u) {
  if (w.size() != u.size()) return false;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_hole() && w[i] != u[i]) return false;
  }
  return true;
}

}  // namespace pwrep
