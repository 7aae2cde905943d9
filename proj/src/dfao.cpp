#include "pwrep/dfao.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "pwrep/catalog.hpp"

namespace pwrep {
namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

std::vector<int> msd_digits(uint64_t n, int base) {
  std::vector<int> digits;
  for (; n; n /= static_cast<uint64_t>(base)) {
    digits.push_back(static_cast<int>(n % static_cast<uint64_t>(base)));
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Dfao canonical_renumber(const Dfao& w) {
  std::vector<int> order(w.state_count(), -1);
  std::vector<int> bfs{w.start()};
  order[w.start()] = 0;
  for (size_t i = 0; i < bfs.size(); ++i) {
    for (int d = 0; d < w.base(); ++d) {
      int to = w.next(bfs[i], d);
      if (order[to] < 0) {
        order[to] = static_cast<int>(bfs.size());
        bfs.push_back(to);
      }
    }
  }
  Dfao out(w.base(), w.alphabet_size());
  for (int s : bfs) out.add_state(w.output(s));
  for (size_t i = 0; i < bfs.size(); ++i) {
    for (int d = 0; d < w.base(); ++d) {
      out.set_transition(static_cast<int>(i), d, order[w.next(bfs[i], d)]);
    }
  }
  out.set_start(0);
  return out;
}

int image_symbol_code(const PartialWord& image, size_t pos, int target_size) {
  Symbol s = image[pos];
  return s.is_hole() ? target_size : s.index();
}

}  // namespace

Dfao::Dfao(int base, int alphabet_size)
    : base_(base), alphabet_size_(alphabet_size) {
  if (base_ < 2) throw std::invalid_argument("automaton base must be >= 2");
  if (alphabet_size_ < 1) {
    throw std::invalid_argument("alphabet must have at least one letter");
  }
}

int Dfao::add_state(int output) {
  if (output < 0 || output > alphabet_size_) {
    throw std::invalid_argument("output code out of range");
  }
  outputs_.push_back(output);
  delta_.resize(delta_.size() + static_cast<size_t>(base_), 0);
  return static_cast<int>(outputs_.size()) - 1;
}

int Dfao::eval(uint64_t n) const {
  int s = start_;
  for (int d : msd_digits(n, base_)) s = next(s, d);
  return output(s);
}

PartialWord Dfao::prefix(size_t length) const {
  std::vector<Symbol> symbols;
  symbols.reserve(length);
  for (size_t n = 0; n < length; ++n) {
    int code = eval(n);
    symbols.push_back(code == alphabet_size_ ? Symbol::hole()
                                             : Symbol::letter(code));
  }
  return PartialWord(std::move(symbols), alphabet_size_);
}

Dfao dfao_from_uniform_fixed_point(const Morphism& m, int seed) {
  auto width = m.uniform_width();
  if (!width || *width < 2) {
    throw std::invalid_argument(
        "fixed-point automaton needs a uniform morphism of width >= 2");
  }
  if (m.target_size() != m.domain_size()) {
    throw std::invalid_argument(
        "fixed-point automaton needs a morphism on a single alphabet");
  }
  if (!m.prolongable_on(seed)) {
    throw std::invalid_argument("morphism is not prolongable on the seed");
  }
  int base = static_cast<int>(*width);
  Dfao w(base, m.domain_size());
  for (int a = 0; a < m.domain_size(); ++a) {
    const PartialWord& image = m.image(a);
    if (!image.is_full()) {
      throw std::invalid_argument("fixed-point images must be hole-free");
    }
    w.add_state(a);
  }
  for (int a = 0; a < m.domain_size(); ++a) {
    for (int d = 0; d < base; ++d) {
      w.set_transition(a, d, m.image(a)[static_cast<size_t>(d)].index());
    }
  }
  w.set_start(seed);
  return minimize(w);
}

Dfao apply_coding(const Dfao& w, const Morphism& coding) {
  if (!coding.is_coding()) {
    throw std::invalid_argument("apply_coding needs a width-1 morphism");
  }
  Dfao out(w.base(), coding.target_size());
  for (size_t s = 0; s < w.state_count(); ++s) {
    int o = w.output(static_cast<int>(s));
    if (o >= coding.domain_size()) {
      throw std::invalid_argument("coding does not cover the alphabet");
    }
    out.add_state(image_symbol_code(coding.image(o), 0, coding.target_size()));
  }
  for (size_t s = 0; s < w.state_count(); ++s) {
    for (int d = 0; d < w.base(); ++d) {
      out.set_transition(static_cast<int>(s), d,
                         w.next(static_cast<int>(s), d));
    }
  }
  out.set_start(w.start());
  return minimize(out);
}

Dfao image_dfao(const Dfao& w, const Morphism& m) {
  auto width = m.uniform_width();
  if (!width) {
    throw std::invalid_argument("image automaton needs a uniform morphism");
  }
  size_t t = *width;
  int base = w.base();
  int target = m.target_size();

  std::vector<int> outputs_used;
  for (size_t s = 0; s < w.state_count(); ++s) {
    outputs_used.push_back(w.output(static_cast<int>(s)));
  }
  std::sort(outputs_used.begin(), outputs_used.end());
  outputs_used.erase(std::unique(outputs_used.begin(), outputs_used.end()),
                     outputs_used.end());

  auto image_of = [&](int code) -> const PartialWord& {
    if (code == w.alphabet_size()) {
      if (m.hole_image()) return *m.hole_image();
    } else if (code < m.domain_size()) {
      return m.image(code);
    }
    throw std::invalid_argument("morphism does not cover symbol code " +
                                std::to_string(code));
  };

  // letter class c -> residue r -> inner symbols o with m(o)[r] = c.
  std::map<int, std::map<size_t, std::vector<int>>> classes;
  for (int o : outputs_used) {
    const PartialWord& img = image_of(o);
    for (size_t r = 0; r < t; ++r) {
      classes[image_symbol_code(img, r, target)][r].push_back(o);
    }
  }

  // Positions n = t*q + r for each residue, shared across letters.
  std::vector<MultiTrackDfa> residue;
  if (t > 1) {
    for (size_t r = 0; r < t; ++r) {
      MultiTrackDfa scaled = atom_mul_const(base, t, "q", "u");
      MultiTrackDfa offset =
          r == 0 ? atom_equal(base, "u", "n")
                 : project(product_and(atom_plus(base, "u", "z", "n"),
                                       atom_const(base, "z", r)),
                           "z");
      residue.push_back(project(product_and(scaled, offset), "u"));
    }
  }

  std::vector<std::pair<int, MultiTrackDfa>> letter_classes;
  for (const auto& [c, by_residue] : classes) {
    MultiTrackDfa acc = empty_automaton(base, {"n"});
    for (const auto& [r, symbols] : by_residue) {
      MultiTrackDfa clause =
          t == 1 ? letter_automaton(w, "n", symbols)
                 : project(product_and(residue[r],
                                       letter_automaton(w, "q", symbols)),
                           "q");
      acc = product_or(acc, clause);
    }
    if (!acc.is_empty()) letter_classes.emplace_back(c, acc);
  }

  // The class languages partition the positions; read them in lockstep
  // and label each joint state by its unique accepting class.
  Dfao out(base, target);
  std::unordered_map<std::vector<int>, int, VecHash> ids;
  std::vector<std::vector<int>> pool;
  auto label = [&](const std::vector<int>& joint) {
    int letter = -1;
    for (size_t i = 0; i < joint.size(); ++i) {
      if (letter_classes[i].second.accepting(joint[i])) {
        if (letter >= 0) {
          throw std::logic_error("image classes overlap");
        }
        letter = letter_classes[i].first;
      }
    }
    if (letter < 0) throw std::logic_error("image classes do not cover");
    return letter;
  };
  std::vector<int> start_joint;
  for (auto& [c, dfa] : letter_classes) start_joint.push_back(dfa.start());
  ids.emplace(start_joint, 0);
  pool.push_back(start_joint);
  out.add_state(label(start_joint));
  for (size_t i = 0; i < pool.size(); ++i) {
    std::vector<int> joint = pool[i];
    for (int d = 0; d < base; ++d) {
      std::vector<int> nxt(joint.size());
      for (size_t j = 0; j < joint.size(); ++j) {
        nxt[j] = letter_classes[j].second.next(joint[j], static_cast<size_t>(d));
      }
      auto [it, fresh] = ids.try_emplace(nxt, static_cast<int>(pool.size()));
      if (fresh) {
        pool.push_back(nxt);
        out.add_state(label(nxt));
      }
      out.set_transition(static_cast<int>(i), d, it->second);
    }
  }
  out.set_start(0);
  return minimize(out);
}

Dfao builtin_dfao(const std::string& name) {
  if (name == "T") {
    return dfao_from_uniform_fixed_point(catalog_morphism("tm"), 0);
  }
  if (name == "VTM") {
    // Pair automaton of consecutive Thue-Morse symbols; the coding
    // 1 + t(n) - t(n+1) yields the ternary squarefree word.
    Morphism pairs = Morphism::parse("0->01, 1->20, 2->23, 3->02");
    Morphism coding = Morphism::parse("0->0, 1->1, 2->2, 3->1", 3);
    return apply_coding(dfao_from_uniform_fixed_point(pairs, 0), coding);
  }
  throw std::invalid_argument("unknown builtin word " + name);
}

Dfao minimize(const Dfao& w) {
  std::vector<int> reach(w.state_count(), -1);
  std::vector<int> order{w.start()};
  reach[w.start()] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    for (int d = 0; d < w.base(); ++d) {
      int to = w.next(order[i], d);
      if (reach[to] < 0) {
        reach[to] = static_cast<int>(order.size());
        order.push_back(to);
      }
    }
  }
  size_t n = order.size();

  std::vector<int> part(n);
  for (size_t i = 0; i < n; ++i) part[i] = w.output(order[i]);
  size_t classes = 0;
  {
    std::vector<int> uniq(part);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    classes = uniq.size();
  }
  while (true) {
    std::unordered_map<std::vector<int>, int, VecHash> sig_ids;
    std::vector<int> next_part(n);
    std::vector<int> sig(static_cast<size_t>(w.base()) + 2);
    for (size_t i = 0; i < n; ++i) {
      sig[0] = part[i];
      sig[1] = w.output(order[i]);
      for (int d = 0; d < w.base(); ++d) {
        sig[static_cast<size_t>(d) + 2] = part[reach[w.next(order[i], d)]];
      }
      auto [it, fresh] =
          sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size()));
      (void)fresh;
      next_part[i] = it->second;
    }
    bool stable = sig_ids.size() == classes;
    part.swap(next_part);
    classes = sig_ids.size();
    if (stable) break;
  }

  std::vector<int> rep(classes, -1);
  for (size_t i = 0; i < n; ++i) {
    if (rep[part[i]] < 0) rep[part[i]] = static_cast<int>(i);
  }
  Dfao out(w.base(), w.alphabet_size());
  for (size_t c = 0; c < classes; ++c) out.add_state(w.output(order[rep[c]]));
  for (size_t c = 0; c < classes; ++c) {
    for (int d = 0; d < w.base(); ++d) {
      out.set_transition(static_cast<int>(c), d,
                         part[reach[w.next(order[rep[c]], d)]]);
    }
  }
  out.set_start(part[0]);
  return canonical_renumber(out);
}

MultiTrackDfa letter_automaton(const Dfao& w, const std::string& track,
                               const std::vector<int>& letters) {
  MultiTrackDfa a(w.base(), {track});
  for (size_t s = 0; s < w.state_count(); ++s) {
    int o = w.output(static_cast<int>(s));
    a.add_state(std::find(letters.begin(), letters.end(), o) != letters.end());
  }
  for (size_t s = 0; s < w.state_count(); ++s) {
    for (int d = 0; d < w.base(); ++d) {
      a.set_transition(static_cast<int>(s), static_cast<size_t>(d),
                       w.next(static_cast<int>(s), d));
    }
  }
  a.set_start(w.start());
  return minimize(a);
}

bool cmp_holds(Cmp c, long long a, long long b) {
  switch (c) {
    case Cmp::eq:
      return a == b;
    case Cmp::ne:
      return a != b;
    case Cmp::lt:
      return a < b;
    case Cmp::le:
      return a <= b;
    case Cmp::gt:
      return a > b;
    case Cmp::ge:
      return a >= b;
  }
  return false;
}

MultiTrackDfa dfao_compare(const Dfao& w1, const std::string& t1,
                           const Dfao& w2, const std::string& t2, Cmp cmp) {
  if (w1.base() != w2.base()) {
    throw std::invalid_argument("word automata over different bases");
  }
  if (t1 == t2) {
    throw std::invalid_argument("dfao_compare needs two distinct tracks");
  }
  int base = w1.base();
  MultiTrackDfa a(base, {t1, t2});
  size_t p1 = a.index_of(t1);
  std::unordered_map<uint64_t, int> ids;
  auto key = [&](int s1, int s2) {
    return static_cast<uint64_t>(s1) * w2.state_count() +
           static_cast<uint64_t>(s2);
  };
  auto acc = [&](int s1, int s2) {
    return cmp_holds(cmp, w1.output(s1), w2.output(s2));
  };
  std::vector<std::pair<int, int>> pool;
  ids[key(w1.start(), w2.start())] = 0;
  pool.emplace_back(w1.start(), w2.start());
  a.add_state(acc(w1.start(), w2.start()));
  for (size_t i = 0; i < pool.size(); ++i) {
    auto [s1, s2] = pool[i];
    for (size_t t = 0; t < a.tuple_count(); ++t) {
      int da = static_cast<int>(t / static_cast<size_t>(base));
      int db = static_cast<int>(t % static_cast<size_t>(base));
      int d1 = p1 == 0 ? da : db;
      int d2 = p1 == 0 ? db : da;
      int n1 = w1.next(s1, d1);
      int n2 = w2.next(s2, d2);
      auto [it, fresh] =
          ids.try_emplace(key(n1, n2), static_cast<int>(pool.size()));
      if (fresh) {
        pool.emplace_back(n1, n2);
        a.add_state(acc(n1, n2));
      }
      a.set_transition(static_cast<int>(i), t, it->second);
    }
  }
  a.set_start(0);
  return minimize(a);
}

std::string to_text(const Dfao& w) {
  std::ostringstream os;
  os << "base " << w.base() << " tracks 1\n";
  for (size_t s = 0; s < w.state_count(); ++s) {
    os << s << " " << w.output(static_cast<int>(s)) << "\n";
  }
  for (size_t s = 0; s < w.state_count(); ++s) {
    for (int d = 0; d < w.base(); ++d) {
      os << s << " (" << d << ") " << w.next(static_cast<int>(s), d) << "\n";
    }
  }
  return os.str();
}

Dfao dfao_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int base = 0;
  bool have_header = false;
  std::vector<int> outputs;
  struct Edge {
    int from;
    int digit;
    int to;
  };
  std::vector<Edge> edges;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "base") {
      std::string tracks_word;
      size_t track_count = 0;
      if (!(ls >> base >> tracks_word >> track_count) ||
          tracks_word != "tracks" || track_count != 1) {
        throw std::invalid_argument("bad word automaton header: " + line);
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw std::invalid_argument("missing automaton header");
    int id = std::stoi(tok);
    std::string second;
    if (!(ls >> second)) {
      throw std::invalid_argument("state line without output: " + line);
    }
    if (second.front() == '(') {
      if (second.back() != ')') {
        throw std::invalid_argument("bad transition line: " + line);
      }
      int digit = std::stoi(second.substr(1, second.size() - 2));
      int to = 0;
      if (!(ls >> to)) throw std::invalid_argument("bad transition: " + line);
      edges.push_back({id, digit, to});
      size_t hi = static_cast<size_t>(std::max(id, to));
      if (outputs.size() <= hi) outputs.resize(hi + 1, -1);
    } else {
      int out = std::stoi(second);
      if (outputs.size() <= static_cast<size_t>(id)) {
        outputs.resize(static_cast<size_t>(id) + 1, -1);
      }
      outputs[static_cast<size_t>(id)] = out;
    }
  }
  if (!have_header) throw std::invalid_argument("missing automaton header");
  int alphabet = 1;
  for (int o : outputs) {
    if (o < 0) throw std::invalid_argument("state without an output");
    alphabet = std::max(alphabet, o + 1);
  }
  Dfao w(base, alphabet);
  for (int o : outputs) w.add_state(o);
  std::vector<bool> defined(outputs.size() * static_cast<size_t>(base), false);
  for (const Edge& e : edges) {
    w.set_transition(e.from, e.digit, e.to);
    defined[static_cast<size_t>(e.from) * base + e.digit] = true;
  }
  for (bool d : defined) {
    if (!d) throw std::invalid_argument("word automaton not total");
  }
  w.set_start(0);
  return w;
}

std::string to_dot(const Dfao& w) {
  std::ostringstream os;
  os << "digraph word_automaton {\n  rankdir=LR;\n  hidden [shape=point];\n";
  for (size_t s = 0; s < w.state_count(); ++s) {
    os << "  " << s << " [shape=circle,label=\"" << s << "/"
       << w.output(static_cast<int>(s)) << "\"];\n";
  }
  os << "  hidden -> " << w.start() << ";\n";
  for (size_t s = 0; s < w.state_count(); ++s) {
    std::map<int, std::string> labels;
    for (int d = 0; d < w.base(); ++d) {
      auto& slot = labels[w.next(static_cast<int>(s), d)];
      if (!slot.empty()) slot += " ";
      slot += std::to_string(d);
    }
    for (auto& [to, lab] : labels) {
      os << "  " << s << " -> " << to << " [label=\"" << lab << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace pwrep
