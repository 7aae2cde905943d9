#include "pwrep/morphism.hpp"

#include <stdexcept>

namespace pwrep {

Morphism::Morphism(std::vector<PartialWord> images, int target_alphabet_size)
    : images_(std::move(images)), target_alphabet_size_(target_alphabet_size) {
  if (images_.empty()) {
    throw std::invalid_argument("morphism needs at least one image");
  }
  for (const PartialWord& img : images_) {
    if (img.alphabet_size() != target_alphabet_size_) {
      throw std::invalid_argument("image alphabet mismatch");
    }
  }
}

Morphism Morphism::parse(std::string_view text,
                         std::optional<int> target_alphabet_size) {
  // Entries look like "<digit>-><digits>", comma separated; whitespace
  // and a trailing comma are tolerated.
  std::vector<std::optional<std::string>> raw;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r')) {
      ++pos;
    }
  };
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("morphism entry must start with a letter");
    }
    int letter = c - '0';
    ++pos;
    skip_ws();
    if (pos + 1 >= text.size() || text[pos] != '-' || text[pos + 1] != '>') {
      throw std::invalid_argument("expected '->' in morphism entry");
    }
    pos += 2;
    skip_ws();
    std::string img;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      img.push_back(text[pos++]);
    }
    if (img.empty()) {
      throw std::invalid_argument("empty image in morphism entry");
    }
    if (letter >= static_cast<int>(raw.size())) raw.resize(letter + 1);
    if (raw[letter]) {
      throw std::invalid_argument("duplicate image for letter " +
                                  std::to_string(letter));
    }
    raw[letter] = std::move(img);
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != ',') {
        throw std::invalid_argument("expected ',' between morphism entries");
      }
      ++pos;
    }
  }
  if (raw.empty()) throw std::invalid_argument("empty morphism");
  int target = 0;
  if (target_alphabet_size) {
    target = *target_alphabet_size;
  } else {
    for (const auto& img : raw) {
      if (!img) continue;
      for (char c : *img) target = std::max(target, c - '0' + 1);
    }
  }
  std::vector<PartialWord> images;
  for (size_t letter = 0; letter < raw.size(); ++letter) {
    if (!raw[letter]) {
      throw std::invalid_argument("missing image for letter " +
                                  std::to_string(letter));
    }
    images.push_back(PartialWord::parse(*raw[letter], target));
  }
  return Morphism(std::move(images), target);
}

const PartialWord& Morphism::image(int letter) const {
  if (letter < 0 || letter >= domain_size()) {
    throw std::invalid_argument("letter " + std::to_string(letter) +
                                " outside morphism domain");
  }
  return images_[letter];
}

void Morphism::set_hole_image(PartialWord image) {
  if (image.alphabet_size() != target_alphabet_size_) {
    throw std::invalid_argument("image alphabet mismatch");
  }
  hole_image_ = std::move(image);
}

std::optional<size_t> Morphism::uniform_width() const {
  size_t w = images_[0].size();
  for (const PartialWord& img : images_) {
    if (img.size() != w) return std::nullopt;
  }
  if (hole_image_ && hole_image_->size() != w) return std::nullopt;
  return w;
}

bool Morphism::prolongable_on(int letter) const {
  if (letter < 0 || letter >= domain_size()) return false;
  const PartialWord& img = images_[letter];
  return img.size() >= 2 && img[0] == Symbol::letter(letter);
}

std::string Morphism::to_string() const {
  std::string out;
  for (int a = 0; a < domain_size(); ++a) {
    if (a) out += ", ";
    out += static_cast<char>('0' + a);
    out += "->";
    out += images_[a].digits();
  }
  return out;
}

PartialWord apply(const Morphism& m, const PartialWord& w) {
  std::vector<Symbol> out;
  if (auto width = m.uniform_width()) out.reserve(w.size() * *width);
  for (size_t i = 0; i < w.size(); ++i) {
    const PartialWord* img;
    if (w[i].is_hole()) {
      if (!m.hole_image()) {
        throw std::invalid_argument("morphism has no image for the hole");
      }
      img = &*m.hole_image();
    } else {
      img = &m.image(w[i].index());
    }
    out.insert(out.end(), img->symbols().begin(), img->symbols().end());
  }
  return PartialWord(std::move(out), m.target_size());
}

PartialWord fixed_point_prefix(const Morphism& m, int seed, size_t length) {
  if (!m.prolongable_on(seed)) {
    throw std::invalid_argument("morphism is not prolongable on letter " +
                                std::to_string(seed));
  }
  for (int a = 0; a < m.domain_size(); ++a) {
    if (!m.image(a).is_full()) {
      throw std::invalid_argument("fixed point needs hole-free images");
    }
  }
  std::vector<Symbol> buf(m.image(seed).symbols());
  size_t next = 1;
  while (buf.size() < length) {
    if (next >= buf.size()) {
      throw std::invalid_argument("fixed point of the morphism is finite");
    }
    const auto& img = m.image(buf[next++].index()).symbols();
    buf.insert(buf.end(), img.begin(), img.end());
  }
  buf.resize(length);
  return PartialWord(std::move(buf), m.target_size());
}

}  // namespace pwrep
