#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pwrep/automaton.hpp"
#include "pwrep/morphism.hpp"
#include "pwrep/word.hpp"

namespace pwrep {

// Automaton with output: reading the msd-first base-k digits of n from
// the start state lands on a state whose output is symbol n of the
// represented word. Outputs use the word digit convention: letters
// 0..alphabet_size-1, with alphabet_size standing for the hole.
class Dfao {
 public:
  Dfao(int base, int alphabet_size);

  int base() const { return base_; }
  int alphabet_size() const { return alphabet_size_; }
  size_t state_count() const { return outputs_.size(); }
  int start() const { return start_; }
  int output(int s) const { return outputs_[s]; }
  int next(int s, int digit) const {
    return delta_[static_cast<size_t>(s) * base_ + digit];
  }

  int add_state(int output);
  void set_start(int s) { start_ = s; }
  void set_transition(int from, int digit, int to) {
    delta_[static_cast<size_t>(from) * base_ + digit] = to;
  }

  // Output code of symbol n (alphabet_size encodes the hole).
  int eval(uint64_t n) const;

  // First `length` symbols as a word.
  PartialWord prefix(size_t length) const;

  friend bool operator==(const Dfao&, const Dfao&) = default;

 private:
  int base_;
  int alphabet_size_;
  int start_ = 0;
  std::vector<int> outputs_;
  std::vector<int> delta_;
};

// Fixed point of a k-uniform morphism as a base-k automaton: one state
// per letter, transitions follow the images. Requires hole-free images
// and prolongability on the seed.
Dfao dfao_from_uniform_fixed_point(const Morphism& m, int seed = 0);

// Replaces outputs by their images under a coding (hole image allowed).
Dfao apply_coding(const Dfao& w, const Morphism& coding);

// Automaton for m(w) where m is uniform of width t: symbol n of the
// image is decided by splitting n = t*q + r and reading symbol q of w.
Dfao image_dfao(const Dfao& w, const Morphism& m);

// Built-in word automata by Walnut name: "T" (Thue-Morse) and "VTM"
// (the ternary squarefree variant).
Dfao builtin_dfao(const std::string& name);

Dfao minimize(const Dfao& w);

// One-track acceptor for positions whose symbol lies in `letters`
// (codes, alphabet_size meaning the hole).
MultiTrackDfa letter_automaton(const Dfao& w, const std::string& track,
                               const std::vector<int>& letters);

enum class Cmp { eq, ne, lt, le, gt, ge };

bool cmp_holds(Cmp c, long long a, long long b);

// Two-track acceptor for index pairs (t1, t2) with
// cmp(w1[t1], w2[t2]); tracks must differ.
MultiTrackDfa dfao_compare(const Dfao& w1, const std::string& t1,
                           const Dfao& w2, const std::string& t2, Cmp cmp);

std::string to_text(const Dfao& w);
Dfao dfao_from_text(const std::string& text);
std::string to_dot(const Dfao& w);

}  // namespace pwrep
