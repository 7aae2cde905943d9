#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwrep {

// Thrown when a construction exceeds the active state ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// RAII scope for the per-thread state ceiling honored by the automaton
// constructions (default: unlimited).
class StateCeiling {
 public:
  explicit StateCeiling(size_t limit);
  ~StateCeiling();
  StateCeiling(const StateCeiling&) = delete;
  StateCeiling& operator=(const StateCeiling&) = delete;

  static size_t current();

 private:
  size_t previous_;
};

// Deterministic automaton over tuples of base-k digits, msd-first.
// Tracks are named variables, kept sorted; a tuple packs one digit per
// track, first track most significant. Every construction keeps the
// language closed under prepending all-zero tuples, so membership
// depends only on the numbers the tracks spell out.
class MultiTrackDfa {
 public:
  MultiTrackDfa(int base, std::vector<std::string> tracks);

  int base() const { return base_; }
  const std::vector<std::string>& tracks() const { return tracks_; }
  size_t track_count() const { return tracks_.size(); }
  size_t tuple_count() const { return tuple_count_; }
  size_t state_count() const { return accepting_.size(); }

  int start() const { return start_; }
  bool accepting(int s) const { return accepting_[s]; }
  int next(int s, size_t tuple) const {
    return delta_[s * tuple_count_ + tuple];
  }

  int add_state(bool accepting);
  void set_start(int s) { start_ = s; }
  void set_accepting(int s, bool acc) { accepting_[s] = acc; }
  void set_transition(int from, size_t tuple, int to) {
    delta_[from * tuple_count_ + tuple] = to;
  }

  // Position of a named track; throws if absent.
  size_t index_of(const std::string& track) const;
  bool has_track(const std::string& track) const;

  // Membership for a full assignment, values listed in track order.
  bool accepts(const std::vector<uint64_t>& values) const;

  // Language emptiness / universality (over reachable part).
  bool is_empty() const;

  // Unique absorbing rejecting state, if present.
  int dead_state() const;

 private:
  int base_;
  std::vector<std::string> tracks_;
  size_t tuple_count_;
  int start_ = 0;
  std::vector<int> delta_;
  std::vector<bool> accepting_;
};

// --- constructions (all results minimized and canonically numbered) ---

MultiTrackDfa universal_automaton(int base,
                                  std::vector<std::string> tracks = {});
MultiTrackDfa empty_automaton(int base, std::vector<std::string> tracks = {});

// x = y, x < y, x + y = z, x = c, c*x = y (c >= 1). Track names must be
// pairwise distinct within one atom.
MultiTrackDfa atom_equal(int base, const std::string& x,
                         const std::string& y);
MultiTrackDfa atom_less(int base, const std::string& x, const std::string& y);
MultiTrackDfa atom_plus(int base, const std::string& x, const std::string& y,
                        const std::string& z);
MultiTrackDfa atom_const(int base, const std::string& x, uint64_t c);
MultiTrackDfa atom_mul_const(int base, uint64_t c, const std::string& x,
                             const std::string& y);

MultiTrackDfa product_and(const MultiTrackDfa& a, const MultiTrackDfa& b);
MultiTrackDfa product_or(const MultiTrackDfa& a, const MultiTrackDfa& b);
MultiTrackDfa complement(const MultiTrackDfa& a);

// Existentially removes one track (with the msd leading-zero fixup).
MultiTrackDfa project(const MultiTrackDfa& a, const std::string& track);

// Canonical minimal automaton of the same language.
MultiTrackDfa minimize(const MultiTrackDfa& a);

MultiTrackDfa rename_track(const MultiTrackDfa& a, const std::string& from,
                           const std::string& to);

// Restricts to assignments with drop = keep, then removes drop.
MultiTrackDfa merge_tracks(const MultiTrackDfa& a, const std::string& keep,
                           const std::string& drop);

// --- text / DOT ---

std::string to_text(const MultiTrackDfa& a);
MultiTrackDfa dfa_from_text(const std::string& text);
std::string to_dot(const MultiTrackDfa& a);

}  // namespace pwrep
