#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwrep/dfao.hpp"
#include "pwrep/logic.hpp"
#include "pwrep/morphism.hpp"

namespace pwrep {

// Outcome of one eval command: a truth value for sentences, an
// automaton over the free variables otherwise.
struct EvalResult {
  std::string name;
  std::string predicate;
  bool is_sentence = true;
  bool truth = false;
  std::optional<MultiTrackDfa> automaton;
};

// Interpreter for Walnut-style scripts. Commands end with ';':
//   morphism <name> "<images>";
//   promote <word> <morphism>;        (fixed point, seeded on letter 0)
//   image <word> <morphism> <inner>;
//   eval <name> "<predicate>";
// Word names resolve to definitions from the script, then to the
// built-ins T and VTM.
class Session {
 public:
  explicit Session(size_t state_ceiling = 10'000'000);

  void run_script(std::string_view text);

  const std::vector<EvalResult>& evals() const { return evals_; }
  const std::vector<logic::StatsEntry>& log() const { return log_; }

  // True when every sentence eval so far came out TRUE.
  bool all_true() const;

  const Dfao& word(const std::string& name);
  const Morphism& morphism(const std::string& name) const;
  bool has_word(const std::string& name) const;

 private:
  void run_command(const std::vector<std::string>& tokens);

  size_t ceiling_;
  std::map<std::string, Morphism> morphisms_;
  std::map<std::string, Dfao> words_;
  std::vector<EvalResult> evals_;
  std::vector<logic::StatsEntry> log_;
};

}  // namespace pwrep
