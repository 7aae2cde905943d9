#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pwrep::theorems {

// Outcome of one built-in verification.
struct Report {
  std::string id;
  bool passed = false;
  // How the result was obtained: "decided" (automaton decision
  // procedure), "bounded" (prefix scan), or "exhaustive" (backtracking
  // search).
  std::string method;
  std::string detail;
};

// The ids accepted by verify(), in canonical order:
//   thm1, thm2-bounded, thm3, thm5, thm6, thm8-i0 .. thm8-i4,
//   table2-small, table3-small, closed-forms.
std::vector<std::string> verification_ids();
bool is_verification_id(const std::string& id);

// Runs one verification.  `state_ceiling` bounds intermediate automaton
// sizes for the decided ids.  Throws std::invalid_argument for an
// unknown id; resource exhaustion propagates as ResourceLimitError.
Report verify(const std::string& id, size_t state_ceiling = 10'000'000);

// All verifications in canonical order.
std::vector<Report> verify_all(size_t state_ceiling = 10'000'000);

// Embedded scripts (thm1, thm3, thm5, thm6, thm8, section5), identical
// to the files under scripts/.  Throws std::invalid_argument for an
// unknown name.
const std::string& script_text(const std::string& name);
std::vector<std::string> script_names();

}  // namespace pwrep::theorems
