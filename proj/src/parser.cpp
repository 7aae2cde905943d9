#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "pwrep/logic.hpp"

namespace pwrep::logic {

Term Term::variable(std::string name) {
  Term t;
  t.kind = TermKind::kVar;
  t.var = std::move(name);
  return t;
}

Term Term::constant(uint64_t v) {
  Term t;
  t.kind = TermKind::kConst;
  t.value = v;
  return t;
}

Term Term::add(Term a, Term b) {
  Term t;
  t.kind = TermKind::kAdd;
  t.kids.push_back(std::move(a));
  t.kids.push_back(std::move(b));
  return t;
}

Term Term::sub(Term a, Term b) {
  Term t;
  t.kind = TermKind::kSub;
  t.kids.push_back(std::move(a));
  t.kids.push_back(std::move(b));
  return t;
}

Term Term::mul(uint64_t factor, Term inner) {
  if (inner.kind == TermKind::kConst) {
    return constant(factor * inner.value);
  }
  if (inner.kind == TermKind::kMul) {
    return mul(factor * inner.value, std::move(inner.kids[0]));
  }
  Term t;
  t.kind = TermKind::kMul;
  t.value = factor;
  t.kids.push_back(std::move(inner));
  return t;
}

Formula Formula::compare(Cmp op, Operand lhs, Operand rhs) {
  Formula f;
  f.kind = FormulaKind::kCompare;
  f.cmp = op;
  f.lhs = std::move(lhs);
  f.rhs = std::move(rhs);
  return f;
}

Formula Formula::negate(Formula inner) {
  Formula f;
  f.kind = FormulaKind::kNot;
  f.kids.push_back(std::move(inner));
  return f;
}

Formula Formula::binary(FormulaKind op, Formula a, Formula b) {
  Formula f;
  f.kind = op;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

Formula Formula::quantifier(FormulaKind op, std::string var, Formula body) {
  Formula f;
  f.kind = op;
  f.var = std::move(var);
  f.kids.push_back(std::move(body));
  return f;
}

namespace {

enum class Tok {
  kIdent,
  kNumber,
  kLetter,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kPlus,
  kMinus,
  kStar,
  kAmp,
  kPipe,
  kTilde,
  kImplies,
  kIff,
  kCmp,
  kComma,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  uint64_t number = 0;
  Cmp cmp = Cmp::eq;
  size_t pos = 0;
};

[[noreturn]] void fail(const std::string& what, size_t pos) {
  throw ParseError(what + " (at offset " + std::to_string(pos) + ")");
}

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(
                                    text[pos]))) {
      ++pos;
    }
  }

  Token next() {
    skip_space();
    Token t;
    t.pos = pos;
    if (pos >= text.size()) return t;
    char c = text[pos];
    auto two = [&](char second) {
      return pos + 1 < text.size() && text[pos + 1] == second;
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::kNumber;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        t.number = t.number * 10 + static_cast<uint64_t>(text[pos] - '0');
        ++pos;
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::kIdent;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_')) {
        t.text += text[pos++];
      }
      return t;
    }
    switch (c) {
      case '@': {
        ++pos;
        if (pos >= text.size() ||
            !std::isdigit(static_cast<unsigned char>(text[pos]))) {
          fail("expected digits after '@'", t.pos);
        }
        t.kind = Tok::kLetter;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
          t.number = t.number * 10 + static_cast<uint64_t>(text[pos] - '0');
          ++pos;
        }
        return t;
      }
      case '(':
        ++pos;
        t.kind = Tok::kLParen;
        return t;
      case ')':
        ++pos;
        t.kind = Tok::kRParen;
        return t;
      case '[':
        ++pos;
        t.kind = Tok::kLBracket;
        return t;
      case ']':
        ++pos;
        t.kind = Tok::kRBracket;
        return t;
      case '+':
        ++pos;
        t.kind = Tok::kPlus;
        return t;
      case '-':
        ++pos;
        t.kind = Tok::kMinus;
        return t;
      case '*':
        ++pos;
        t.kind = Tok::kStar;
        return t;
      case '&':
        ++pos;
        t.kind = Tok::kAmp;
        return t;
      case '|':
        ++pos;
        t.kind = Tok::kPipe;
        return t;
      case '~':
        ++pos;
        t.kind = Tok::kTilde;
        return t;
      case ',':
        ++pos;
        t.kind = Tok::kComma;
        return t;
      case '=':
        if (two('>')) {
          pos += 2;
          t.kind = Tok::kImplies;
        } else {
          ++pos;
          t.kind = Tok::kCmp;
          t.cmp = Cmp::eq;
        }
        return t;
      case '!':
        if (!two('=')) fail("expected '=' after '!'", t.pos);
        pos += 2;
        t.kind = Tok::kCmp;
        t.cmp = Cmp::ne;
        return t;
      case '<':
        if (pos + 2 < text.size() && text[pos + 1] == '=' &&
            text[pos + 2] == '>') {
          pos += 3;
          t.kind = Tok::kIff;
        } else if (two('=')) {
          pos += 2;
          t.kind = Tok::kCmp;
          t.cmp = Cmp::le;
        } else {
          ++pos;
          t.kind = Tok::kCmp;
          t.cmp = Cmp::lt;
        }
        return t;
      case '>':
        if (two('=')) {
          pos += 2;
          t.kind = Tok::kCmp;
          t.cmp = Cmp::ge;
        } else {
          ++pos;
          t.kind = Tok::kCmp;
          t.cmp = Cmp::gt;
        }
        return t;
      default:
        fail(std::string("unexpected character '") + c + "'", t.pos);
    }
  }
};

std::vector<Token> tokenize(std::string_view text) {
  Lexer lex{text};
  std::vector<Token> out;
  while (true) {
    Token t = lex.next();
    bool end = t.kind == Tok::kEnd;
    out.push_back(std::move(t));
    if (end) return out;
  }
}

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t i = at + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }
  Token take() { return toks[std::min(at++, toks.size() - 1)]; }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what, peek().pos);
    ++at;
  }

  // Quantifier shorthand: an identifier "Ex" ("Ax") binds x; a bare
  // "E" ("A") binds the following identifiers.
  bool quantifier_at(size_t ahead = 0) const {
    const Token& t = peek(ahead);
    if (t.kind != Tok::kIdent || t.text.empty()) return false;
    char c = t.text[0];
    if (c != 'E' && c != 'A') return false;
    if (t.text.size() > 1) return peek(ahead + 1).kind != Tok::kLBracket;
    return peek(ahead + 1).kind == Tok::kIdent;
  }

  Term parse_term(int min_bp) {
    Term lhs = parse_term_primary();
    while (true) {
      Tok k = peek().kind;
      if ((k == Tok::kPlus || k == Tok::kMinus) && min_bp <= 10) {
        ++at;
        Term rhs = parse_term(11);
        lhs = k == Tok::kPlus ? Term::add(std::move(lhs), std::move(rhs))
                              : Term::sub(std::move(lhs), std::move(rhs));
      } else if (k == Tok::kStar && min_bp <= 20) {
        size_t pos = peek().pos;
        ++at;
        Term rhs = parse_term(21);
        if (lhs.kind == TermKind::kConst) {
          lhs = Term::mul(lhs.value, std::move(rhs));
        } else if (rhs.kind == TermKind::kConst) {
          lhs = Term::mul(rhs.value, std::move(lhs));
        } else {
          fail("one side of '*' must be a constant", pos);
        }
      } else {
        return lhs;
      }
    }
  }

  Term parse_term_primary() {
    const Token& t = peek();
    if (t.kind == Tok::kNumber) {
      ++at;
      return Term::constant(t.number);
    }
    if (t.kind == Tok::kIdent) {
      std::string name = t.text;
      ++at;
      return Term::variable(std::move(name));
    }
    if (t.kind == Tok::kLParen) {
      ++at;
      Term inner = parse_term(0);
      expect(Tok::kRParen, "')'");
      return inner;
    }
    fail("expected a term", t.pos);
  }

  Operand parse_operand() {
    const Token& t = peek();
    if (t.kind == Tok::kLetter) {
      Operand o;
      o.kind = Operand::Kind::kLetter;
      o.letter = t.number;
      ++at;
      return o;
    }
    if (t.kind == Tok::kIdent && peek(1).kind == Tok::kLBracket) {
      Operand o;
      o.kind = Operand::Kind::kWordIndex;
      o.word = t.text;
      at += 2;
      o.term = parse_term(0);
      expect(Tok::kRBracket, "']'");
      return o;
    }
    Operand o;
    o.kind = Operand::Kind::kTerm;
    o.term = parse_term(0);
    return o;
  }

  Formula parse_comparison() {
    Operand lhs = parse_operand();
    if (peek().kind != Tok::kCmp) fail("expected a comparison", peek().pos);
    Cmp op = take().cmp;
    Operand rhs = parse_operand();
    return Formula::compare(op, std::move(lhs), std::move(rhs));
  }

  Formula parse_prefix() {
    const Token& t = peek();
    if (t.kind == Tok::kTilde) {
      ++at;
      return Formula::negate(parse_formula(4));
    }
    if (quantifier_at()) {
      Token q = take();
      FormulaKind kind =
          q.text[0] == 'E' ? FormulaKind::kExists : FormulaKind::kForall;
      std::vector<std::string> vars;
      if (q.text.size() > 1) {
        vars.push_back(q.text.substr(1));
      } else {
        if (peek().kind != Tok::kIdent) {
          fail("expected a variable after quantifier", peek().pos);
        }
        vars.push_back(take().text);
      }
      while (peek().kind == Tok::kComma && peek(1).kind == Tok::kIdent) {
        ++at;
        vars.push_back(take().text);
      }
      Formula body = parse_formula(0);
      for (size_t i = vars.size(); i-- > 0;) {
        body = Formula::quantifier(kind, vars[i], std::move(body));
      }
      return body;
    }
    if (t.kind == Tok::kLParen) {
      size_t mark = at;
      try {
        return parse_comparison();
      } catch (const ParseError&) {
        at = mark;
      }
      ++at;
      Formula inner = parse_formula(0);
      expect(Tok::kRParen, "')'");
      return inner;
    }
    return parse_comparison();
  }

  Formula parse_formula(int min_bp) {
    Formula lhs = parse_prefix();
    while (true) {
      Tok k = peek().kind;
      if (k == Tok::kAmp && min_bp <= 3) {
        ++at;
        lhs = Formula::binary(FormulaKind::kAnd, std::move(lhs),
                              parse_formula(4));
      } else if (k == Tok::kPipe && min_bp <= 2) {
        ++at;
        lhs = Formula::binary(FormulaKind::kOr, std::move(lhs),
                              parse_formula(3));
      } else if (k == Tok::kImplies && min_bp <= 1) {
        ++at;
        lhs = Formula::binary(FormulaKind::kImplies, std::move(lhs),
                              parse_formula(1));
      } else if (k == Tok::kIff && min_bp <= 1) {
        ++at;
        lhs = Formula::binary(FormulaKind::kIff, std::move(lhs),
                              parse_formula(1));
      } else {
        return lhs;
      }
    }
  }
};

}  // namespace

Predicate parse_predicate(std::string_view text) {
  Predicate p;
  size_t start = 0;
  while (start < text.size() &&
         std::isspace(static_cast<unsigned char>(text[start]))) {
    ++start;
  }
  if (start < text.size() && text[start] == '?') {
    size_t end = start + 1;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string ann(text.substr(start + 1, end - start - 1));
    if (ann.rfind("msd_", 0) != 0 || ann.size() == 4) {
      fail("unsupported numeration annotation ?" + ann, start);
    }
    int base = 0;
    for (size_t i = 4; i < ann.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(ann[i]))) {
        fail("unsupported numeration annotation ?" + ann, start);
      }
      base = base * 10 + (ann[i] - '0');
    }
    if (base < 2) fail("numeration base must be at least 2", start);
    p.base = base;
    text = text.substr(end);
  }
  Parser parser{tokenize(text), 0};
  p.body = parser.parse_formula(0);
  if (parser.peek().kind != Tok::kEnd) {
    fail("trailing input after formula", parser.peek().pos);
  }
  return p;
}

std::string print(const Term& t) {
  switch (t.kind) {
    case TermKind::kVar:
      return t.var;
    case TermKind::kConst:
      return std::to_string(t.value);
    case TermKind::kAdd:
      return "(" + print(t.kids[0]) + "+" + print(t.kids[1]) + ")";
    case TermKind::kSub:
      return "(" + print(t.kids[0]) + "-" + print(t.kids[1]) + ")";
    case TermKind::kMul:
      return "(" + std::to_string(t.value) + "*" + print(t.kids[0]) + ")";
  }
  return "?";
}

std::string print(const Operand& o) {
  switch (o.kind) {
    case Operand::Kind::kTerm:
      return print(o.term);
    case Operand::Kind::kWordIndex:
      return o.word + "[" + print(o.term) + "]";
    case Operand::Kind::kLetter:
      return "@" + std::to_string(o.letter);
  }
  return "?";
}

namespace {

const char* cmp_symbol(Cmp c) {
  switch (c) {
    case Cmp::eq:
      return "=";
    case Cmp::ne:
      return "!=";
    case Cmp::lt:
      return "<";
    case Cmp::le:
      return "<=";
    case Cmp::gt:
      return ">";
    case Cmp::ge:
      return ">=";
  }
  return "?";
}

}  // namespace

std::string print(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kCompare:
      return print(f.lhs) + cmp_symbol(f.cmp) + print(f.rhs);
    case FormulaKind::kNot:
      return "(~" + print(f.kids[0]) + ")";
    case FormulaKind::kAnd:
      return "(" + print(f.kids[0]) + "&" + print(f.kids[1]) + ")";
    case FormulaKind::kOr:
      return "(" + print(f.kids[0]) + "|" + print(f.kids[1]) + ")";
    case FormulaKind::kImplies:
      return "(" + print(f.kids[0]) + "=>" + print(f.kids[1]) + ")";
    case FormulaKind::kIff:
      return "(" + print(f.kids[0]) + "<=>" + print(f.kids[1]) + ")";
    case FormulaKind::kExists:
      return "(E" + f.var + " " + print(f.kids[0]) + ")";
    case FormulaKind::kForall:
      return "(A" + f.var + " " + print(f.kids[0]) + ")";
  }
  return "?";
}

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::kVar) out.insert(t.var);
  for (const Term& k : t.kids) term_vars(k, out);
}

void operand_vars(const Operand& o, std::set<std::string>& out) {
  if (o.kind != Operand::Kind::kLetter) term_vars(o.term, out);
}

void formula_vars(const Formula& f, std::set<std::string>& out) {
  if (f.kind == FormulaKind::kCompare) {
    operand_vars(f.lhs, out);
    operand_vars(f.rhs, out);
    return;
  }
  if (f.kind == FormulaKind::kExists || f.kind == FormulaKind::kForall) {
    std::set<std::string> inner;
    formula_vars(f.kids[0], inner);
    inner.erase(f.var);
    out.insert(inner.begin(), inner.end());
    return;
  }
  for (const Formula& k : f.kids) formula_vars(k, out);
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
  std::set<std::string> vars;
  formula_vars(f, vars);
  return {vars.begin(), vars.end()};
}

std::string format_stats(const StatsEntry& e) {
  return e.formula + ":" + std::to_string(e.states) + " states - " +
         std::to_string(e.millis) + "ms";
}

}  // namespace pwrep::logic
