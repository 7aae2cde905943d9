// A fixed corpus of first-order predicates together with independent
// semantic oracles.  Each entry pairs a Walnut-syntax predicate (at most two
// free variables) with a hand-written C++ evaluation of the same property
// against plain symbol prefixes.  The runner compiles the predicate to an
// automaton and compares acceptance with the oracle for every assignment of
// the free variables below a limit.
//
// The corpus includes the standard repetition predicates (square, antisquare,
// c-antisquare, the seven-disjunct cube, weak overlap, trivial square, and
// the full-word square) instantiated over words with and without holes, plus
// arithmetic, subtraction, multiplication-by-constant, quantifier, and
// letter-coercion exercises.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pwrep/dfao.hpp"
#include "pwrep/logic.hpp"
#include "pwrep/session.hpp"

namespace pwrep::corpus {

// Symbol prefixes used by the oracles.  `wh` is the image of the ternary
// squarefree word under 0->1100, 1->011<hole>, 2->1010 with the hole written
// as letter 2 (binary alphabet, so code 2 denotes the hole).
struct PrefixTable {
  std::vector<int> t;    // Thue-Morse word
  std::vector<int> vtm;  // ternary squarefree word
  std::vector<int> wh;   // binary partial word, hole = 2
};

using Assignment = std::array<uint64_t, 2>;
using Oracle = std::function<bool(const Assignment&, const PrefixTable&)>;

struct CorpusEntry {
  std::string name;
  std::string predicate;           // Walnut-syntax text
  std::vector<std::string> vars;   // free variables, sorted
  Oracle oracle;
};

inline PrefixTable make_prefix_table(Session& session, size_t length) {
  PrefixTable table;
  const Dfao& t = session.word("T");
  const Dfao& vtm = session.word("VTM");
  const Dfao& wh = session.word("Wh");
  table.t.resize(length);
  table.vtm.resize(length);
  table.wh.resize(length);
  for (size_t i = 0; i < length; ++i) {
    table.t[i] = t.eval(i);
    table.vtm[i] = vtm.eval(i);
    table.wh[i] = wh.eval(i);
  }
  return table;
}

// Pointwise compatibility over the binary-with-hole alphabet of `wh`.
inline bool compat(int a, int b) { return a == 2 || b == 2 || a == b; }

// Three symbols admit a common letter iff their non-hole values agree.
inline bool joint3(int a, int b, int c) {
  int letter = -1;
  for (int s : {a, b, c}) {
    if (s == 2) continue;
    if (letter == -1) letter = s;
    else if (letter != s) return false;
  }
  return true;
}

inline std::vector<CorpusEntry> entries() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::string predicate,
                 std::vector<std::string> vars, Oracle oracle) {
    out.push_back({std::move(name), std::move(predicate), std::move(vars),
                   std::move(oracle)});
  };

  // --- repetition predicates over the partial word Wh (hole = @2) ---
  add("square-at",
      "Ai (i<n) => (Wh[j+i]=Wh[j+n+i] | Wh[j+i]=@2 | Wh[j+n+i]=@2)",
      {"j", "n"}, [](const Assignment& a, const PrefixTable& p) {
        uint64_t j = a[0], n = a[1];
        for (uint64_t i = 0; i < n; ++i)
          if (!compat(p.wh[j + i], p.wh[j + n + i])) return false;
        return true;
      });
  add("antisquare-at",
      "Ai (i<n) => (Wh[j+i]!=Wh[j+n+i] & Wh[j+i]!=@2 & Wh[j+n+i]!=@2)",
      {"j", "n"}, [](const Assignment& a, const PrefixTable& p) {
        uint64_t j = a[0], n = a[1];
        for (uint64_t i = 0; i < n; ++i) {
          int u = p.wh[j + i], v = p.wh[j + n + i];
          if (u == 2 || v == 2 || u == v) return false;
        }
        return true;
      });
  add("c-antisquare-at",
      "Ai (i<n) => (Wh[j+i]!=Wh[j+n+i] | Wh[j+i]=@2 | Wh[j+n+i]=@2)",
      {"j", "n"}, [](const Assignment& a, const PrefixTable& p) {
        uint64_t j = a[0], n = a[1];
        for (uint64_t i = 0; i < n; ++i) {
          int u = p.wh[j + i], v = p.wh[j + n + i];
          if (u != 2 && v != 2 && u == v) return false;
        }
        return true;
      });
  add("cube-at",
      "Ai (i<n) => ((Wh[j+i]=Wh[j+n+i] & Wh[j+n+i]=Wh[j+2*n+i])"
      " | (Wh[j+i]=@2 & Wh[j+n+i]=Wh[j+2*n+i])"
      " | (Wh[j+n+i]=@2 & Wh[j+i]=Wh[j+2*n+i])"
      " | (Wh[j+2*n+i]=@2 & Wh[j+i]=Wh[j+n+i])"
      " | (Wh[j+i]=@2 & Wh[j+n+i]=@2)"
      " | (Wh[j+i]=@2 & Wh[j+2*n+i]=@2)"
      " | (Wh[j+n+i]=@2 & Wh[j+2*n+i]=@2))",
      {"j", "n"}, [](const Assignment& a, const PrefixTable& p) {
        uint64_t j = a[0], n = a[1];
        for (uint64_t i = 0; i < n; ++i)
          if (!joint3(p.wh[j + i], p.wh[j + n + i], p.wh[j + 2 * n + i]))
            return false;
        return true;
      });
  add("weak-overlap-at",
      "Ai (i<=n) => (Wh[j+i]=Wh[j+n+i] | Wh[j+i]=@2 | Wh[j+n+i]=@2)",
      {"j", "n"}, [](const Assignment& a, const PrefixTable& p) {
        uint64_t j = a[0], n = a[1];
        for (uint64_t i = 0; i <= n; ++i)
          if (!compat(p.wh[j + i], p.wh[j + n + i])) return false;
        return true;
      });
  add("trivial-square-at",
      "(Wh[j]=@2 & Wh[j+1]!=@2) | (Wh[j]!=@2 & Wh[j+1]=@2)", {"j"},
      [](const Assignment& a, const PrefixTable& p) {
        uint64_t j = a[0];
        return (p.wh[j] == 2) != (p.wh[j + 1] == 2);
      });
  add("full-square-at", "Ai (i<n) => T[j+i]=T[j+n+i]", {"j", "n"},
      [](const Assignment& a, const PrefixTable& p) {
        uint64_t j = a[0], n = a[1];
        for (uint64_t i = 0; i < n; ++i)
          if (p.t[j + i] != p.t[j + n + i]) return false;
        return true;
      });

  // --- arithmetic and quantifier exercises ---
  add("lt-window", "?msd_2 x<y & y<=x+3", {"x", "y"},
      [](const Assignment& a, const PrefixTable&) {
        return a[0] < a[1] && a[1] <= a[0] + 3;
      });
  add("even", "Ei x=2*i", {"x"}, [](const Assignment& a, const PrefixTable&) {
    return a[0] % 2 == 0;
  });
  add("affine", "3*x=y+2", {"x", "y"},
      [](const Assignment& a, const PrefixTable&) {
        return 3 * a[0] == a[1] + 2;
      });
  add("iff-cancel", "(x+y=2*x) <=> (x=y)", {"x", "y"},
      [](const Assignment& a, const PrefixTable&) {
        return (a[0] + a[1] == 2 * a[0]) == (a[0] == a[1]);
      });
  add("sub-index", "T[x-1]=@1", {"x"},
      [](const Assignment& a, const PrefixTable& p) {
        return a[0] >= 1 && p.t[a[0] - 1] == 1;
      });
  add("tm-even", "T[2*x]=T[x]", {"x"},
      [](const Assignment& a, const PrefixTable& p) {
        return p.t[2 * a[0]] == p.t[a[0]];
      });
  add("tm-odd", "T[2*x+1]!=T[x]", {"x"},
      [](const Assignment& a, const PrefixTable& p) {
        return p.t[2 * a[0] + 1] != p.t[a[0]];
      });
  add("vtm-two", "VTM[x]=@2", {"x"},
      [](const Assignment& a, const PrefixTable& p) {
        return p.vtm[a[0]] == 2;
      });
  add("vtm-adjacent", "VTM[x]!=VTM[x+1]", {"x"},
      [](const Assignment& a, const PrefixTable& p) {
        return p.vtm[a[0]] != p.vtm[a[0] + 1];
      });
  add("cross-word", "T[x]=VTM[y]", {"x", "y"},
      [](const Assignment& a, const PrefixTable& p) {
        return p.t[a[0]] == p.vtm[a[1]];
      });
  add("exists-pair-below", "Ei (i<x & T[i]=@1 & T[i+1]=@1)", {"x"},
      [](const Assignment& a, const PrefixTable& p) {
        for (uint64_t i = 0; i < a[0]; ++i)
          if (p.t[i] == 1 && p.t[i + 1] == 1) return true;
        return false;
      });
  add("no-adjacent-ones-below", "Ai (i<x) => (VTM[i]!=@1 | VTM[i+1]!=@1)",
      {"x"}, [](const Assignment& a, const PrefixTable& p) {
        for (uint64_t i = 0; i < a[0]; ++i)
          if (p.vtm[i] == 1 && p.vtm[i + 1] == 1) return false;
        return true;
      });
  add("diff-letter", "x<=y => T[y-x]=@0", {"x", "y"},
      [](const Assignment& a, const PrefixTable& p) {
        return a[0] > a[1] || p.t[a[1] - a[0]] == 0;
      });
  add("between", "Ei (x<i & i<y & T[i]=@0)", {"x", "y"},
      [](const Assignment& a, const PrefixTable& p) {
        for (uint64_t i = a[0] + 1; i < a[1]; ++i)
          if (p.t[i] == 0) return true;
        return false;
      });
  add("const-sentence", "T[5]=@1 & VTM[7]=@1", {},
      [](const Assignment&, const PrefixTable& p) {
        return p.t[5] == 1 && p.vtm[7] == 1;
      });
  add("coerce-letter", "T[x]=1", {"x"},
      [](const Assignment& a, const PrefixTable& p) {
        return p.t[a[0]] == 1;
      });
  return out;
}

struct CorpusResult {
  std::string name;
  bool ok = false;
  uint64_t checked = 0;
  std::string detail;  // first mismatch, if any
};

// Compiles `entry.predicate` and compares the automaton against the oracle
// for every assignment with all free variables below `limit`.
inline CorpusResult check_entry(const CorpusEntry& entry,
                                const std::map<std::string, Dfao>& words,
                                const PrefixTable& prefixes, uint64_t limit) {
  CorpusResult result;
  result.name = entry.name;
  logic::Predicate pred = logic::parse_predicate(entry.predicate);
  std::vector<std::string> free = logic::free_variables(pred.body);
  if (free != entry.vars) {
    result.detail = "free-variable mismatch";
    return result;
  }
  logic::CompileEnv env;
  env.base = pred.base;
  env.words = &words;
  if (free.empty()) {
    bool truth = logic::decide(pred, env);
    bool expected = entry.oracle({0, 0}, prefixes);
    result.checked = 1;
    result.ok = truth == expected;
    if (!result.ok) result.detail = "sentence truth mismatch";
    return result;
  }
  MultiTrackDfa dfa = logic::compile_predicate(pred, env);
  std::vector<uint64_t> values(free.size());
  Assignment a{0, 0};
  uint64_t outer = free.size() == 2 ? limit : 1;
  for (uint64_t hi = 0; hi < outer; ++hi) {
    for (uint64_t lo = 0; lo < limit; ++lo) {
      a[0] = free.size() == 2 ? hi : lo;
      a[1] = lo;
      values[0] = a[0];
      if (free.size() == 2) values[1] = a[1];
      bool got = dfa.accepts(values);
      bool expected = entry.oracle(a, prefixes);
      ++result.checked;
      if (got != expected) {
        result.detail = entry.name + " mismatch at (" + std::to_string(a[0]) +
                        "," + std::to_string(a[1]) + "): automaton " +
                        (got ? "accepts" : "rejects");
        return result;
      }
    }
  }
  result.ok = true;
  return result;
}

}  // namespace pwrep::corpus
