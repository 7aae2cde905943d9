#include "pwrep/automaton.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace pwrep {
namespace {

thread_local size_t g_state_ceiling = std::numeric_limits<size_t>::max();

void check_ceiling(size_t states) {
  if (states > g_state_ceiling) {
    throw ResourceLimitError("automaton construction exceeded the ceiling of " +
                             std::to_string(g_state_ceiling) + " states");
  }
}

size_t pow_size(int base, size_t exp) {
  size_t r = 1;
  while (exp--) r *= static_cast<size_t>(base);
  return r;
}

int tuple_digit(size_t tuple, size_t pos, size_t track_count, int base) {
  size_t place = pow_size(base, track_count - 1 - pos);
  return static_cast<int>((tuple / place) % static_cast<size_t>(base));
}

std::vector<std::string> sorted_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(u));
  return u;
}

// For each tuple over `uni`, the corresponding tuple over `own` (a
// subsequence of uni). Used to run component automata inside products.
std::vector<size_t> tuple_remap(const std::vector<std::string>& uni,
                                const std::vector<std::string>& own,
                                int base) {
  std::vector<size_t> pos;
  pos.reserve(own.size());
  for (const auto& t : own) {
    auto it = std::lower_bound(uni.begin(), uni.end(), t);
    pos.push_back(static_cast<size_t>(it - uni.begin()));
  }
  size_t count = pow_size(base, uni.size());
  std::vector<size_t> map(count);
  for (size_t u = 0; u < count; ++u) {
    size_t own_tuple = 0;
    for (size_t p : pos) {
      own_tuple = own_tuple * static_cast<size_t>(base) +
                  static_cast<size_t>(tuple_digit(u, p, uni.size(), base));
    }
    map[u] = own_tuple;
  }
  return map;
}

struct VecHash {
  template <typename T>
  size_t operator()(const std::vector<T>& v) const {
    size_t h = 1469598103934665603ull;
    for (T x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

// Canonical renumbering: BFS from the start, exploring tuples in
// ascending order. Assumes every state is reachable.
MultiTrackDfa canonical_renumber(const MultiTrackDfa& a) {
  std::vector<int> order(a.state_count(), -1);
  std::vector<int> bfs;
  bfs.push_back(a.start());
  order[a.start()] = 0;
  for (size_t i = 0; i < bfs.size(); ++i) {
    int s = bfs[i];
    for (size_t t = 0; t < a.tuple_count(); ++t) {
      int to = a.next(s, t);
      if (order[to] < 0) {
        order[to] = static_cast<int>(bfs.size());
        bfs.push_back(to);
      }
    }
  }
  MultiTrackDfa out(a.base(), a.tracks());
  for (size_t i = 0; i < bfs.size(); ++i) {
    out.add_state(a.accepting(bfs[i]));
  }
  for (size_t i = 0; i < bfs.size(); ++i) {
    int s = bfs[i];
    for (size_t t = 0; t < a.tuple_count(); ++t) {
      out.set_transition(static_cast<int>(i), t, order[a.next(s, t)]);
    }
  }
  out.set_start(0);
  return out;
}

MultiTrackDfa product(const MultiTrackDfa& a, const MultiTrackDfa& b,
                      bool keep_and) {
  if (a.base() != b.base()) {
    throw std::invalid_argument("product of automata over different bases");
  }
  int base = a.base();
  std::vector<std::string> uni = sorted_union(a.tracks(), b.tracks());
  std::vector<size_t> ma = tuple_remap(uni, a.tracks(), base);
  std::vector<size_t> mb = tuple_remap(uni, b.tracks(), base);

  MultiTrackDfa out(base, uni);
  std::unordered_map<uint64_t, int> ids;
  auto key = [&](int sa, int sb) {
    return static_cast<uint64_t>(sa) * b.state_count() +
           static_cast<uint64_t>(sb);
  };
  auto acc = [&](int sa, int sb) {
    return keep_and ? (a.accepting(sa) && b.accepting(sb))
                    : (a.accepting(sa) || b.accepting(sb));
  };
  std::vector<std::pair<int, int>> pool;
  ids[key(a.start(), b.start())] = 0;
  pool.emplace_back(a.start(), b.start());
  out.add_state(acc(a.start(), b.start()));
  for (size_t i = 0; i < pool.size(); ++i) {
    auto [sa, sb] = pool[i];
    for (size_t t = 0; t < out.tuple_count(); ++t) {
      int na = a.next(sa, ma[t]);
      int nb = b.next(sb, mb[t]);
      auto [it, fresh] = ids.try_emplace(key(na, nb),
                                         static_cast<int>(pool.size()));
      if (fresh) {
        pool.emplace_back(na, nb);
        out.add_state(acc(na, nb));
        check_ceiling(pool.size());
      }
      out.set_transition(static_cast<int>(i), t, it->second);
    }
  }
  out.set_start(0);
  return minimize(out);
}

}  // namespace

StateCeiling::StateCeiling(size_t limit) : previous_(g_state_ceiling) {
  g_state_ceiling = limit;
}

StateCeiling::~StateCeiling() { g_state_ceiling = previous_; }

size_t StateCeiling::current() { return g_state_ceiling; }

MultiTrackDfa::MultiTrackDfa(int base, std::vector<std::string> tracks)
    : base_(base), tracks_(std::move(tracks)) {
  if (base_ < 2) throw std::invalid_argument("automaton base must be >= 2");
  std::sort(tracks_.begin(), tracks_.end());
  if (std::adjacent_find(tracks_.begin(), tracks_.end()) != tracks_.end()) {
    throw std::invalid_argument("duplicate track name");
  }
  tuple_count_ = pow_size(base_, tracks_.size());
}

int MultiTrackDfa::add_state(bool accepting) {
  accepting_.push_back(accepting);
  delta_.resize(delta_.size() + tuple_count_, 0);
  return static_cast<int>(accepting_.size()) - 1;
}

size_t MultiTrackDfa::index_of(const std::string& track) const {
  auto it = std::lower_bound(tracks_.begin(), tracks_.end(), track);
  if (it == tracks_.end() || *it != track) {
    throw std::invalid_argument("no track named " + track);
  }
  return static_cast<size_t>(it - tracks_.begin());
}

bool MultiTrackDfa::has_track(const std::string& track) const {
  return std::binary_search(tracks_.begin(), tracks_.end(), track);
}

bool MultiTrackDfa::accepts(const std::vector<uint64_t>& values) const {
  if (values.size() != tracks_.size()) {
    throw std::invalid_argument("assignment arity mismatch");
  }
  const uint64_t b = static_cast<uint64_t>(base_);
  uint64_t place = 1;
  for (uint64_t v : values) {
    while (place <= v / b) place *= b;
  }
  int s = start_;
  for (; place > 0; place /= b) {
    size_t tuple = 0;
    for (uint64_t v : values) {
      tuple = tuple * static_cast<size_t>(base_) +
              static_cast<size_t>((v / place) % b);
    }
    s = next(s, tuple);
  }
  return accepting_[s];
}

bool MultiTrackDfa::is_empty() const {
  std::vector<bool> seen(state_count(), false);
  std::vector<int> stack{start_};
  seen[start_] = true;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    if (accepting_[s]) return false;
    for (size_t t = 0; t < tuple_count_; ++t) {
      int to = next(s, t);
      if (!seen[to]) {
        seen[to] = true;
        stack.push_back(to);
      }
    }
  }
  return true;
}

int MultiTrackDfa::dead_state() const {
  for (size_t s = 0; s < state_count(); ++s) {
    if (accepting_[s]) continue;
    bool absorbing = true;
    for (size_t t = 0; t < tuple_count_ && absorbing; ++t) {
      absorbing = next(static_cast<int>(s), t) == static_cast<int>(s);
    }
    if (absorbing) return static_cast<int>(s);
  }
  return -1;
}

MultiTrackDfa universal_automaton(int base, std::vector<std::string> tracks) {
  MultiTrackDfa a(base, std::move(tracks));
  a.add_state(true);
  for (size_t t = 0; t < a.tuple_count(); ++t) a.set_transition(0, t, 0);
  a.set_start(0);
  return a;
}

MultiTrackDfa empty_automaton(int base, std::vector<std::string> tracks) {
  MultiTrackDfa a(base, std::move(tracks));
  a.add_state(false);
  for (size_t t = 0; t < a.tuple_count(); ++t) a.set_transition(0, t, 0);
  a.set_start(0);
  return a;
}

MultiTrackDfa atom_equal(int base, const std::string& x,
                         const std::string& y) {
  MultiTrackDfa a(base, {x, y});
  size_t px = a.index_of(x), py = a.index_of(y);
  int eq = a.add_state(true);
  int dead = a.add_state(false);
  for (size_t t = 0; t < a.tuple_count(); ++t) {
    int dx = tuple_digit(t, px, 2, base);
    int dy = tuple_digit(t, py, 2, base);
    a.set_transition(eq, t, dx == dy ? eq : dead);
    a.set_transition(dead, t, dead);
  }
  a.set_start(eq);
  return minimize(a);
}

MultiTrackDfa atom_less(int base, const std::string& x, const std::string& y) {
  MultiTrackDfa a(base, {x, y});
  size_t px = a.index_of(x), py = a.index_of(y);
  int eq = a.add_state(false);
  int lt = a.add_state(true);
  int gt = a.add_state(false);
  for (size_t t = 0; t < a.tuple_count(); ++t) {
    int dx = tuple_digit(t, px, 2, base);
    int dy = tuple_digit(t, py, 2, base);
    a.set_transition(eq, t, dx == dy ? eq : (dx < dy ? lt : gt));
    a.set_transition(lt, t, lt);
    a.set_transition(gt, t, gt);
  }
  a.set_start(eq);
  return minimize(a);
}

MultiTrackDfa atom_plus(int base, const std::string& x, const std::string& y,
                        const std::string& z) {
  MultiTrackDfa a(base, {x, y, z});
  size_t px = a.index_of(x), py = a.index_of(y), pz = a.index_of(z);
  // States track the debt (x + y - z) of the processed prefix; only 0
  // and -1 can still reach an accepting configuration.
  int s0 = a.add_state(true);
  int s1 = a.add_state(false);
  int dead = a.add_state(false);
  for (size_t t = 0; t < a.tuple_count(); ++t) {
    int dx = tuple_digit(t, px, 3, base);
    int dy = tuple_digit(t, py, 3, base);
    int dz = tuple_digit(t, pz, 3, base);
    for (int s : {0, -1}) {
      int debt = base * s + dx + dy - dz;
      int from = s == 0 ? s0 : s1;
      a.set_transition(from, t, debt == 0 ? s0 : (debt == -1 ? s1 : dead));
    }
    a.set_transition(dead, t, dead);
  }
  a.set_start(s0);
  return minimize(a);
}

MultiTrackDfa atom_const(int base, const std::string& x, uint64_t c) {
  std::vector<int> digits;
  for (uint64_t v = c; v; v /= static_cast<uint64_t>(base)) {
    digits.push_back(static_cast<int>(v % static_cast<uint64_t>(base)));
  }
  std::reverse(digits.begin(), digits.end());
  MultiTrackDfa a(base, {x});
  size_t m = digits.size();
  for (size_t i = 0; i <= m; ++i) a.add_state(i == m);
  int dead = a.add_state(false);
  for (int d = 0; d < base; ++d) {
    size_t t = static_cast<size_t>(d);
    a.set_transition(0, t, d == 0 && m == 0   ? 0
                           : m > 0 && d == 0  ? 0
                           : m > 0 && d == digits[0] ? 1
                                              : dead);
    for (size_t i = 1; i < m; ++i) {
      a.set_transition(static_cast<int>(i), t,
                       d == digits[i] ? static_cast<int>(i) + 1 : dead);
    }
    if (m > 0) a.set_transition(static_cast<int>(m), t, dead);
    a.set_transition(dead, t, dead);
  }
  a.set_start(0);
  return minimize(a);
}

MultiTrackDfa atom_mul_const(int base, uint64_t c, const std::string& x,
                             const std::string& y) {
  if (c == 0) throw std::invalid_argument("atom_mul_const requires c >= 1");
  if (c > 1000000) throw std::invalid_argument("constant multiplier too big");
  MultiTrackDfa a(base, {x, y});
  size_t px = a.index_of(x), py = a.index_of(y);
  // State -s records debt c*x - y = -s for the processed prefix; debts
  // outside (-c, 0] can never return to 0.
  int n = static_cast<int>(c);
  std::vector<int> states;
  for (int s = 0; s < n; ++s) states.push_back(a.add_state(s == 0));
  int dead = a.add_state(false);
  for (size_t t = 0; t < a.tuple_count(); ++t) {
    int dx = tuple_digit(t, px, 2, base);
    int dy = tuple_digit(t, py, 2, base);
    for (int s = 0; s < n; ++s) {
      long long debt = static_cast<long long>(base) * (-s) +
                       static_cast<long long>(n) * dx - dy;
      bool live = debt <= 0 && debt > -n;
      a.set_transition(states[s], t,
                       live ? states[static_cast<size_t>(-debt)] : dead);
    }
    a.set_transition(dead, t, dead);
  }
  a.set_start(states[0]);
  return minimize(a);
}

MultiTrackDfa product_and(const MultiTrackDfa& a, const MultiTrackDfa& b) {
  return product(a, b, true);
}

MultiTrackDfa product_or(const MultiTrackDfa& a, const MultiTrackDfa& b) {
  return product(a, b, false);
}

MultiTrackDfa complement(const MultiTrackDfa& a) {
  MultiTrackDfa out = a;
  for (size_t s = 0; s < out.state_count(); ++s) {
    out.set_accepting(static_cast<int>(s), !out.accepting(static_cast<int>(s)));
  }
  return minimize(out);
}

MultiTrackDfa project(const MultiTrackDfa& a, const std::string& track) {
  size_t idx = a.index_of(track);
  int base = a.base();
  size_t old_count = a.track_count();
  std::vector<std::string> reduced = a.tracks();
  reduced.erase(reduced.begin() + static_cast<ptrdiff_t>(idx));

  size_t tail = pow_size(base, old_count - 1 - idx);
  auto full_tuple = [&](size_t r, int d) {
    size_t hi = r / tail, lo = r % tail;
    return (hi * static_cast<size_t>(base) + static_cast<size_t>(d)) * tail +
           lo;
  };

  // The erased value may need more digits than the remaining tracks, so
  // the joint encoding starts with tuples that are zero on every kept
  // track; fold those into the initial state set.
  std::vector<bool> in_closure(a.state_count(), false);
  std::vector<int> closure{a.start()};
  in_closure[a.start()] = true;
  for (size_t i = 0; i < closure.size(); ++i) {
    for (int d = 0; d < base; ++d) {
      int to = a.next(closure[i], full_tuple(0, d));
      if (!in_closure[to]) {
        in_closure[to] = true;
        closure.push_back(to);
      }
    }
  }
  std::sort(closure.begin(), closure.end());

  size_t reduced_count = a.tuple_count() / static_cast<size_t>(base);
  // Subsets of the source states are represented as bitsets so that the
  // determinization loop costs a few machine words per transition instead
  // of a sort and rehash of an integer vector.
  size_t words = (a.state_count() + 63) / 64;
  std::vector<size_t> tuple_of(reduced_count * static_cast<size_t>(base));
  for (size_t r = 0; r < reduced_count; ++r) {
    for (int d = 0; d < base; ++d) {
      tuple_of[r * static_cast<size_t>(base) + static_cast<size_t>(d)] =
          full_tuple(r, d);
    }
  }
  std::vector<uint64_t> accepting_mask(words, 0);
  for (size_t s = 0; s < a.state_count(); ++s) {
    if (a.accepting(static_cast<int>(s))) {
      accepting_mask[s >> 6] |= uint64_t{1} << (s & 63);
    }
  }
  auto accepting_subset = [&](const std::vector<uint64_t>& set) {
    for (size_t w = 0; w < words; ++w) {
      if (set[w] & accepting_mask[w]) return true;
    }
    return false;
  };

  std::vector<uint64_t> initial(words, 0);
  for (int s : closure) initial[static_cast<size_t>(s) >> 6] |=
      uint64_t{1} << (static_cast<size_t>(s) & 63);

  MultiTrackDfa out(base, reduced);
  std::unordered_map<std::vector<uint64_t>, int, VecHash> ids;
  std::vector<std::vector<uint64_t>> pool;
  ids.emplace(initial, 0);
  pool.push_back(std::move(initial));
  out.add_state(accepting_subset(pool.front()));
  std::vector<uint64_t> target(words);
  for (size_t i = 0; i < pool.size(); ++i) {
    for (size_t r = 0; r < reduced_count; ++r) {
      std::fill(target.begin(), target.end(), 0);
      const std::vector<uint64_t>& current = pool[i];
      const size_t* tuples = &tuple_of[r * static_cast<size_t>(base)];
      for (size_t w = 0; w < words; ++w) {
        uint64_t bits = current[w];
        while (bits) {
          int s = static_cast<int>((w << 6) +
                                   static_cast<size_t>(std::countr_zero(bits)));
          bits &= bits - 1;
          for (int d = 0; d < base; ++d) {
            size_t to = static_cast<size_t>(a.next(s, tuples[d]));
            target[to >> 6] |= uint64_t{1} << (to & 63);
          }
        }
      }
      auto [it, fresh] = ids.try_emplace(target, static_cast<int>(pool.size()));
      if (fresh) {
        pool.push_back(target);
        out.add_state(accepting_subset(target));
        check_ceiling(pool.size());
      }
      out.set_transition(static_cast<int>(i), r, it->second);
    }
  }
  out.set_start(0);
  return minimize(out);
}

MultiTrackDfa minimize(const MultiTrackDfa& a) {
  // Restrict to the reachable part.
  std::vector<int> reach(a.state_count(), -1);
  std::vector<int> order;
  reach[a.start()] = 0;
  order.push_back(a.start());
  for (size_t i = 0; i < order.size(); ++i) {
    for (size_t t = 0; t < a.tuple_count(); ++t) {
      int to = a.next(order[i], t);
      if (reach[to] < 0) {
        reach[to] = static_cast<int>(order.size());
        order.push_back(to);
      }
    }
  }
  size_t n = order.size();

  // Moore partition refinement over the reachable states.
  std::vector<int> part(n);
  for (size_t i = 0; i < n; ++i) part[i] = a.accepting(order[i]) ? 1 : 0;
  size_t classes = 2;
  while (true) {
    std::unordered_map<std::vector<int>, int, VecHash> sig_ids;
    std::vector<int> next_part(n);
    std::vector<int> sig(a.tuple_count() + 1);
    for (size_t i = 0; i < n; ++i) {
      sig[0] = part[i];
      for (size_t t = 0; t < a.tuple_count(); ++t) {
        sig[t + 1] = part[reach[a.next(order[i], t)]];
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

  // Quotient automaton on class representatives.
  std::vector<int> rep(classes, -1);
  for (size_t i = 0; i < n; ++i) {
    if (rep[part[i]] < 0) rep[part[i]] = static_cast<int>(i);
  }
  MultiTrackDfa out(a.base(), a.tracks());
  for (size_t c = 0; c < classes; ++c) {
    out.add_state(a.accepting(order[rep[c]]));
  }
  for (size_t c = 0; c < classes; ++c) {
    int s = order[rep[c]];
    for (size_t t = 0; t < a.tuple_count(); ++t) {
      out.set_transition(static_cast<int>(c), t, part[reach[a.next(s, t)]]);
    }
  }
  out.set_start(part[0]);
  return canonical_renumber(out);
}

MultiTrackDfa rename_track(const MultiTrackDfa& a, const std::string& from,
                           const std::string& to) {
  a.index_of(from);
  if (a.has_track(to)) {
    throw std::invalid_argument("rename target track already exists");
  }
  std::vector<std::string> renamed = a.tracks();
  for (auto& t : renamed) {
    if (t == from) t = to;
  }
  MultiTrackDfa out(a.base(), renamed);
  // Map each new tuple to the old tuple with the same digit per track.
  std::vector<size_t> pos_new_to_old(out.track_count());
  for (size_t i = 0; i < out.track_count(); ++i) {
    const std::string& name = out.tracks()[i];
    pos_new_to_old[i] = a.index_of(name == to ? from : name);
  }
  for (size_t s = 0; s < a.state_count(); ++s) out.add_state(a.accepting(s));
  for (size_t t = 0; t < out.tuple_count(); ++t) {
    size_t old_tuple = 0;
    std::vector<int> old_digits(a.track_count());
    for (size_t i = 0; i < out.track_count(); ++i) {
      old_digits[pos_new_to_old[i]] =
          tuple_digit(t, i, out.track_count(), a.base());
    }
    for (size_t i = 0; i < a.track_count(); ++i) {
      old_tuple = old_tuple * static_cast<size_t>(a.base()) +
                  static_cast<size_t>(old_digits[i]);
    }
    for (size_t s = 0; s < a.state_count(); ++s) {
      out.set_transition(static_cast<int>(s), t,
                         a.next(static_cast<int>(s), old_tuple));
    }
  }
  out.set_start(a.start());
  return canonical_renumber(out);
}

MultiTrackDfa merge_tracks(const MultiTrackDfa& a, const std::string& keep,
                           const std::string& drop) {
  size_t pk = a.index_of(keep);
  size_t pd = a.index_of(drop);
  if (pk == pd) throw std::invalid_argument("merge_tracks needs two tracks");
  int base = a.base();
  std::vector<std::string> reduced = a.tracks();
  reduced.erase(reduced.begin() + static_cast<ptrdiff_t>(pd));
  size_t keep_reduced = pk < pd ? pk : pk - 1;

  size_t tail = pow_size(base, a.track_count() - 1 - pd);
  MultiTrackDfa out(base, reduced);
  for (size_t s = 0; s < a.state_count(); ++s) out.add_state(a.accepting(s));
  for (size_t r = 0; r < out.tuple_count(); ++r) {
    int dk = tuple_digit(r, keep_reduced, out.track_count(), base);
    size_t hi = r / tail, lo = r % tail;
    size_t full =
        (hi * static_cast<size_t>(base) + static_cast<size_t>(dk)) * tail + lo;
    for (size_t s = 0; s < a.state_count(); ++s) {
      out.set_transition(static_cast<int>(s), r,
                         a.next(static_cast<int>(s), full));
    }
  }
  out.set_start(a.start());
  return minimize(out);
}

std::string to_text(const MultiTrackDfa& a) {
  std::ostringstream os;
  os << "base " << a.base() << " tracks " << a.track_count() << "\n";
  for (size_t s = 0; s < a.state_count(); ++s) {
    os << s;
    if (a.accepting(static_cast<int>(s))) os << " accepting";
    os << "\n";
  }
  for (size_t s = 0; s < a.state_count(); ++s) {
    for (size_t t = 0; t < a.tuple_count(); ++t) {
      os << s << " (";
      for (size_t i = 0; i < a.track_count(); ++i) {
        if (i) os << ",";
        os << tuple_digit(t, i, a.track_count(), a.base());
      }
      os << ") " << a.next(static_cast<int>(s), t) << "\n";
    }
  }
  return os.str();
}

MultiTrackDfa dfa_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int base = 0;
  size_t track_count = 0;
  bool have_header = false;
  std::vector<bool> accepting;
  struct Edge {
    int from;
    size_t tuple;
    int to;
  };
  std::vector<Edge> edges;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "base") {
      std::string tracks_word;
      if (!(ls >> base >> tracks_word >> track_count) ||
          tracks_word != "tracks") {
        throw std::invalid_argument("bad automaton header: " + line);
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw std::invalid_argument("missing automaton header");
    int id = std::stoi(tok);
    std::string second;
    if (!(ls >> second)) {
      // plain non-accepting state line
      if (id < 0) throw std::invalid_argument("negative state id");
      if (accepting.size() <= static_cast<size_t>(id)) {
        accepting.resize(static_cast<size_t>(id) + 1, false);
      }
      continue;
    }
    if (second.front() == '(') {
      std::string rest = second;
      while (rest.back() != ')') {
        std::string more;
        if (!(ls >> more)) {
          throw std::invalid_argument("bad transition line: " + line);
        }
        rest += more;
      }
      size_t tuple = 0;
      std::string body = rest.substr(1, rest.size() - 2);
      std::istringstream ds(body);
      std::string digit;
      size_t seen = 0;
      while (std::getline(ds, digit, ',')) {
        tuple = tuple * static_cast<size_t>(base) +
                static_cast<size_t>(std::stoi(digit));
        ++seen;
      }
      if (seen != track_count) {
        throw std::invalid_argument("transition arity mismatch: " + line);
      }
      int to = 0;
      if (!(ls >> to)) throw std::invalid_argument("bad transition: " + line);
      edges.push_back({id, tuple, to});
      if (accepting.size() <= static_cast<size_t>(std::max(id, to))) {
        accepting.resize(static_cast<size_t>(std::max(id, to)) + 1, false);
      }
    } else if (second == "accepting") {
      if (accepting.size() <= static_cast<size_t>(id)) {
        accepting.resize(static_cast<size_t>(id) + 1, false);
      }
      accepting[static_cast<size_t>(id)] = true;
    } else {
      throw std::invalid_argument("unexpected state field: " + line);
    }
  }
  if (!have_header) throw std::invalid_argument("missing automaton header");
  if (track_count > 9) throw std::invalid_argument("too many tracks");
  std::vector<std::string> names;
  for (size_t i = 0; i < track_count; ++i) {
    names.push_back("t" + std::to_string(i));
  }
  MultiTrackDfa a(base, names);
  for (bool acc : accepting) a.add_state(acc);
  std::vector<bool> defined(accepting.size() * a.tuple_count(), false);
  for (const Edge& e : edges) {
    a.set_transition(e.from, e.tuple, e.to);
    defined[static_cast<size_t>(e.from) * a.tuple_count() + e.tuple] = true;
  }
  for (bool d : defined) {
    if (!d) throw std::invalid_argument("automaton transitions not total");
  }
  a.set_start(0);
  return a;
}

std::string to_dot(const MultiTrackDfa& a) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  hidden [shape=point];\n";
  for (size_t s = 0; s < a.state_count(); ++s) {
    os << "  " << s << " [shape="
       << (a.accepting(static_cast<int>(s)) ? "doublecircle" : "circle")
       << "];\n";
  }
  os << "  hidden -> " << a.start() << ";\n";
  for (size_t s = 0; s < a.state_count(); ++s) {
    std::unordered_map<int, std::string> labels;
    for (size_t t = 0; t < a.tuple_count(); ++t) {
      std::string lab;
      for (size_t i = 0; i < a.track_count(); ++i) {
        if (i) lab += ",";
        lab += std::to_string(tuple_digit(t, i, a.track_count(), a.base()));
      }
      if (a.track_count() > 1) lab = "(" + lab + ")";
      auto& slot = labels[a.next(static_cast<int>(s), t)];
      if (!slot.empty()) slot += " ";
      slot += lab;
    }
    std::vector<int> targets;
    for (auto& [to, lab] : labels) targets.push_back(to);
    std::sort(targets.begin(), targets.end());
    for (int to : targets) {
      os << "  " << s << " -> " << to << " [label=\"" << labels[to]
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace pwrep
