#include <chrono>
#include <map>
#include <utility>

#include "pwrep/logic.hpp"

namespace pwrep::logic {
namespace {

Cmp flip(Cmp c) {
  switch (c) {
    case Cmp::lt:
      return Cmp::gt;
    case Cmp::le:
      return Cmp::ge;
    case Cmp::gt:
      return Cmp::lt;
    case Cmp::ge:
      return Cmp::le;
    default:
      return c;
  }
}

MultiTrackDfa truth(int base, bool value) {
  return value ? universal_automaton(base) : empty_automaton(base);
}

struct Compiler {
  const CompileEnv& env;
  int temp_counter = 0;
  std::map<std::string, Dfao> builtin_cache = {};

  std::string fresh() { return "$" + std::to_string(temp_counter++); }

  const Dfao& word(const std::string& name) {
    if (env.words) {
      auto it = env.words->find(name);
      if (it != env.words->end()) return check_base(name, it->second);
    }
    auto it = builtin_cache.find(name);
    if (it != builtin_cache.end()) return it->second;
    try {
      auto [pos, _] = builtin_cache.emplace(name, builtin_dfao(name));
      return check_base(name, pos->second);
    } catch (const std::invalid_argument&) {
      throw CompileError("unknown word " + name);
    }
  }

  const Dfao& check_base(const std::string& name, const Dfao& w) {
    if (w.base() != env.base) {
      throw CompileError("word " + name + " lives in base " +
                         std::to_string(w.base()) + ", formula uses base " +
                         std::to_string(env.base));
    }
    return w;
  }

  // --- linear view of terms ---

  struct Linear {
    std::map<std::string, long long> coeffs;
    long long constant = 0;
  };

  void linearize(const Term& t, long long scale, Linear& out) {
    switch (t.kind) {
      case TermKind::kVar:
        out.coeffs[t.var] += scale;
        return;
      case TermKind::kConst:
        out.constant += scale * static_cast<long long>(t.value);
        return;
      case TermKind::kAdd:
        linearize(t.kids[0], scale, out);
        linearize(t.kids[1], scale, out);
        return;
      case TermKind::kSub:
        linearize(t.kids[0], scale, out);
        linearize(t.kids[1], -scale, out);
        return;
      case TermKind::kMul:
        linearize(t.kids[0], scale * static_cast<long long>(t.value), out);
        return;
    }
  }

  // Chains additions so one track carries Σ coeff*var + constant.
  std::string build_sum(const std::map<std::string, long long>& coeffs,
                        long long constant,
                        std::vector<MultiTrackDfa>& constraints,
                        std::vector<std::string>& temps) {
    std::vector<std::string> pieces;
    for (const auto& [var, c] : coeffs) {
      if (c == 1) {
        pieces.push_back(var);
      } else {
        std::string t = fresh();
        constraints.push_back(
            atom_mul_const(env.base, static_cast<uint64_t>(c), var, t));
        temps.push_back(t);
        pieces.push_back(t);
      }
    }
    if (constant > 0 || pieces.empty()) {
      std::string t = fresh();
      constraints.push_back(
          atom_const(env.base, t, static_cast<uint64_t>(constant)));
      temps.push_back(t);
      pieces.push_back(t);
    }
    while (pieces.size() > 1) {
      std::string s = fresh();
      constraints.push_back(atom_plus(env.base, pieces[0], pieces[1], s));
      temps.push_back(s);
      pieces.erase(pieces.begin(), pieces.begin() + 2);
      pieces.insert(pieces.begin(), s);
    }
    return pieces[0];
  }

  MultiTrackDfa conjoin_project(MultiTrackDfa core,
                                const std::vector<MultiTrackDfa>& constraints,
                                const std::vector<std::string>& temps) {
    for (const MultiTrackDfa& c : constraints) {
      core = product_and(core, c);
    }
    for (size_t i = temps.size(); i-- > 0;) {
      core = project(core, temps[i]);
    }
    return core;
  }

  // Track with the comparison atom for cmp over two distinct tracks.
  MultiTrackDfa cmp_atom(Cmp cmp, const std::string& u, const std::string& v) {
    switch (cmp) {
      case Cmp::eq:
        return atom_equal(env.base, u, v);
      case Cmp::ne:
        return complement(atom_equal(env.base, u, v));
      case Cmp::lt:
        return atom_less(env.base, u, v);
      case Cmp::le:
        return complement(atom_less(env.base, v, u));
      case Cmp::gt:
        return atom_less(env.base, v, u);
      case Cmp::ge:
        return complement(atom_less(env.base, u, v));
    }
    throw CompileError("bad comparison");
  }

  MultiTrackDfa compile_numeric(Cmp cmp, const Term& lhs, const Term& rhs) {
    Linear lin;
    linearize(lhs, 1, lin);
    linearize(rhs, -1, lin);
    std::map<std::string, long long> left, right;
    for (const auto& [var, c] : lin.coeffs) {
      if (c > 0) {
        left[var] = c;
      } else if (c < 0) {
        right[var] = -c;
      }
    }
    long long kl = lin.constant > 0 ? lin.constant : 0;
    long long kr = lin.constant < 0 ? -lin.constant : 0;
    if (left.empty() && right.empty()) {
      return truth(env.base, cmp_holds(cmp, kl, kr));
    }
    std::vector<MultiTrackDfa> constraints;
    std::vector<std::string> temps;
    std::string u = build_sum(left, kl, constraints, temps);
    std::string v = build_sum(right, kr, constraints, temps);
    return conjoin_project(cmp_atom(cmp, u, v), constraints, temps);
  }

  // Track naming an index term, adding an equality constraint when the
  // term is not a plain variable.
  std::string index_track(const Term& t,
                          std::vector<MultiTrackDfa>& constraints,
                          std::vector<std::string>& temps) {
    if (t.kind == TermKind::kVar) return t.var;
    std::string u = fresh();
    temps.push_back(u);
    constraints.push_back(compile_numeric(Cmp::eq, t, Term::variable(u)));
    return u;
  }

  std::vector<int> letter_set(const Dfao& w, Cmp cmp, uint64_t letter) {
    std::vector<int> out;
    for (int code = 0; code <= w.alphabet_size(); ++code) {
      if (cmp_holds(cmp, code, static_cast<long long>(letter))) {
        out.push_back(code);
      }
    }
    return out;
  }

  // A term usable as a letter constant: a constant-valued term.
  static bool constant_letter(const Operand& o, uint64_t& out) {
    if (o.kind == Operand::Kind::kLetter) {
      out = o.letter;
      return true;
    }
    if (o.kind == Operand::Kind::kTerm &&
        o.term.kind == TermKind::kConst) {
      out = o.term.value;
      return true;
    }
    return false;
  }

  MultiTrackDfa compile_compare(const Formula& f) {
    const Operand& lhs = f.lhs;
    const Operand& rhs = f.rhs;
    bool lw = lhs.kind == Operand::Kind::kWordIndex;
    bool rw = rhs.kind == Operand::Kind::kWordIndex;
    if (lw && rw) {
      const Dfao& w1 = word(lhs.word);
      const Dfao& w2 = word(rhs.word);
      std::vector<MultiTrackDfa> constraints;
      std::vector<std::string> temps;
      std::string u = index_track(lhs.term, constraints, temps);
      std::string v = index_track(rhs.term, constraints, temps);
      MultiTrackDfa core =
          u == v ? rename_track(
                       merge_tracks(dfao_compare(w1, "$cl", w2, "$cr", f.cmp),
                                    "$cl", "$cr"),
                       "$cl", u)
                 : dfao_compare(w1, u, w2, v, f.cmp);
      return conjoin_project(std::move(core), constraints, temps);
    }
    if (lw || rw) {
      const Operand& wordside = lw ? lhs : rhs;
      const Operand& other = lw ? rhs : lhs;
      Cmp cmp = lw ? f.cmp : flip(f.cmp);
      uint64_t letter = 0;
      if (!constant_letter(other, letter)) {
        throw CompileError(
            "word symbols can only be compared with letters or other "
            "word symbols");
      }
      const Dfao& w = word(wordside.word);
      std::vector<MultiTrackDfa> constraints;
      std::vector<std::string> temps;
      std::string u = index_track(wordside.term, constraints, temps);
      MultiTrackDfa core = letter_automaton(w, u, letter_set(w, cmp, letter));
      return conjoin_project(std::move(core), constraints, temps);
    }
    uint64_t a = 0, b = 0;
    bool la = lhs.kind == Operand::Kind::kLetter;
    bool lb = rhs.kind == Operand::Kind::kLetter;
    if (la || lb) {
      if (constant_letter(lhs, a) && constant_letter(rhs, b)) {
        return truth(env.base, cmp_holds(f.cmp, static_cast<long long>(a),
                                         static_cast<long long>(b)));
      }
      throw CompileError("letters can only be compared with word symbols");
    }
    return compile_numeric(f.cmp, lhs.term, rhs.term);
  }

  MultiTrackDfa compile(const Formula& f) {
    auto t0 = std::chrono::steady_clock::now();
    MultiTrackDfa a = dispatch(f);
    if (env.log) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      env.log->push_back({print(f), a.state_count(), ms});
    }
    return a;
  }

  MultiTrackDfa dispatch(const Formula& f) {
    switch (f.kind) {
      case FormulaKind::kCompare:
        return compile_compare(f);
      case FormulaKind::kNot:
        return complement(compile(f.kids[0]));
      case FormulaKind::kAnd:
        return product_and(compile(f.kids[0]), compile(f.kids[1]));
      case FormulaKind::kOr:
        return product_or(compile(f.kids[0]), compile(f.kids[1]));
      case FormulaKind::kImplies:
        return product_or(complement(compile(f.kids[0])), compile(f.kids[1]));
      case FormulaKind::kIff: {
        MultiTrackDfa a = compile(f.kids[0]);
        MultiTrackDfa b = compile(f.kids[1]);
        return product_and(product_or(complement(a), b),
                           product_or(complement(b), a));
      }
      case FormulaKind::kExists: {
        MultiTrackDfa inner = compile(f.kids[0]);
        return inner.has_track(f.var) ? project(inner, f.var) : inner;
      }
      case FormulaKind::kForall: {
        MultiTrackDfa inner = compile(f.kids[0]);
        if (!inner.has_track(f.var)) return inner;
        return complement(project(complement(inner), f.var));
      }
    }
    throw CompileError("bad formula");
  }
};

}  // namespace

MultiTrackDfa compile_formula(const Formula& f, const CompileEnv& env) {
  StateCeiling guard(env.state_ceiling);
  Compiler c{env};
  return c.compile(f);
}

MultiTrackDfa compile_predicate(const Predicate& p, const CompileEnv& env) {
  CompileEnv scoped = env;
  scoped.base = p.base;
  MultiTrackDfa a = compile_formula(p.body, scoped);
  for (const std::string& v : free_variables(p.body)) {
    if (!a.has_track(v)) {
      a = product_and(a, universal_automaton(scoped.base, {v}));
    }
  }
  return a;
}

bool decide(const Predicate& p, const CompileEnv& env) {
  if (!free_variables(p.body).empty()) {
    throw CompileError("sentence expected, but variables are free");
  }
  CompileEnv scoped = env;
  scoped.base = p.base;
  MultiTrackDfa a = compile_formula(p.body, scoped);
  return a.accepting(a.start());
}

}  // namespace pwrep::logic
