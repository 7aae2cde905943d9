#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pwrep/automaton.hpp"
#include "pwrep/dfao.hpp"

namespace pwrep::logic {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- terms -----------------------------------------------------------

enum class TermKind { kVar, kConst, kAdd, kSub, kMul };

struct Term {
  TermKind kind = TermKind::kConst;
  std::string var;     // kVar
  uint64_t value = 0;  // kConst, and the factor of kMul
  std::vector<Term> kids;  // two for kAdd/kSub, one for kMul

  static Term variable(std::string name);
  static Term constant(uint64_t v);
  static Term add(Term a, Term b);
  static Term sub(Term a, Term b);
  static Term mul(uint64_t factor, Term t);
};

// --- comparisons -----------------------------------------------------

// One side of a comparison: a numeric term, a word symbol W[t], or a
// letter constant @c.
struct Operand {
  enum class Kind { kTerm, kWordIndex, kLetter } kind = Kind::kTerm;
  Term term;         // kTerm, and the index of kWordIndex
  std::string word;  // kWordIndex
  uint64_t letter = 0;  // kLetter
};

// --- formulas --------------------------------------------------------

enum class FormulaKind {
  kCompare,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kExists,
  kForall,
};

struct Formula {
  FormulaKind kind = FormulaKind::kCompare;
  Cmp cmp = Cmp::eq;         // kCompare
  Operand lhs, rhs;          // kCompare
  std::string var;           // quantifiers
  std::vector<Formula> kids; // one for kNot/quantifiers, two for binary

  static Formula compare(Cmp op, Operand lhs, Operand rhs);
  static Formula negate(Formula f);
  static Formula binary(FormulaKind op, Formula a, Formula b);
  static Formula quantifier(FormulaKind op, std::string var, Formula body);
};

// A predicate with its numeration base (the ?msd_k annotation,
// defaulting to base 2).
struct Predicate {
  int base = 2;
  Formula body;
};

// Walnut-syntax predicate parser.
Predicate parse_predicate(std::string_view text);

// Walnut-style fully parenthesized rendering.
std::string print(const Term& t);
std::string print(const Operand& o);
std::string print(const Formula& f);

// Free variables in sorted order.
std::vector<std::string> free_variables(const Formula& f);

// --- compilation -----------------------------------------------------

struct StatsEntry {
  std::string formula;
  size_t states = 0;
  long long millis = 0;
};

// Rendered as "<formula>:<states> states - <millis>ms".
std::string format_stats(const StatsEntry& e);

struct CompileEnv {
  int base = 2;
  const std::map<std::string, Dfao>* words = nullptr;
  size_t state_ceiling = 10'000'000;
  std::vector<StatsEntry>* log = nullptr;
};

// Automaton over the constrained free variables of the formula; free
// variables the truth value never depends on may be absent from the
// track list.
MultiTrackDfa compile_formula(const Formula& f, const CompileEnv& env);

// Compiles and cylindrifies so every free variable has a track.
MultiTrackDfa compile_predicate(const Predicate& p, const CompileEnv& env);

// Truth of a sentence (throws CompileError if variables are free).
bool decide(const Predicate& p, const CompileEnv& env);

}  // namespace pwrep::logic
