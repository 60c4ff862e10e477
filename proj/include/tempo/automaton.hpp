#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tempo/guard.hpp"
#include "tempo/timed_word.hpp"

namespace tempo {

using LocationId = std::size_t;

/// Letter used for silent transitions in the text format.
inline constexpr std::string_view kSilentLetter = "eps";

struct Transition {
  LocationId source = 0;
  Symbol letter;
  Guard guard;
  std::vector<ClockId> resets;
  LocationId target = 0;
  /// Only stopwatch automata may carry silent transitions.
  bool silent = false;
  friend bool operator==(const Transition&, const Transition&) = default;
};

enum class Acceptance { finite, buchi };

/// Timed automaton with diagonal-free guards. `final` is read as the set of
/// final locations (finite words) or the Büchi repeated set (infinite words)
/// depending on the acceptance parameter.
template <Acceptance Acc>
struct BasicTimedAutomaton {
  static constexpr Acceptance acceptance = Acc;

  std::string name = "A";
  Alphabet alphabet;
  std::vector<std::string> locations;
  std::vector<std::string> clocks;
  std::vector<LocationId> initial;
  std::vector<LocationId> final;
  std::vector<Transition> transitions;

  [[nodiscard]] std::size_t clock_count() const { return clocks.size(); }

  /// Largest constant appearing in a guard (the K of TA(n, K)).
  [[nodiscard]] std::int64_t max_constant() const {
    std::int64_t k = 0;
    for (const auto& t : transitions) k = std::max(k, t.guard.max_constant());
    return k;
  }

  [[nodiscard]] std::optional<LocationId> find_location(std::string_view n) const {
    auto it = std::find(locations.begin(), locations.end(), n);
    if (it == locations.end()) return std::nullopt;
    return static_cast<LocationId>(it - locations.begin());
  }
  [[nodiscard]] std::optional<ClockId> find_clock(std::string_view n) const {
    auto it = std::find(clocks.begin(), clocks.end(), n);
    if (it == clocks.end()) return std::nullopt;
    return static_cast<ClockId>(it - clocks.begin());
  }

  LocationId add_location(std::string n) {
    if (auto id = find_location(n)) return *id;
    locations.push_back(std::move(n));
    return locations.size() - 1;
  }
  ClockId add_clock(std::string n) {
    if (auto id = find_clock(n)) return *id;
    clocks.push_back(std::move(n));
    return clocks.size() - 1;
  }
  void add_letter(const Symbol& a) {
    if (!contains(alphabet, a)) alphabet.push_back(a);
  }

  BasicTimedAutomaton& add_transition(LocationId src, Symbol letter, Guard g,
                                      std::vector<ClockId> resets, LocationId dst) {
    transitions.push_back({src, std::move(letter), std::move(g), std::move(resets), dst, false});
    return *this;
  }

  [[nodiscard]] std::vector<bool> initial_mask() const { return mask(initial); }
  [[nodiscard]] std::vector<bool> final_mask() const { return mask(final); }

  [[nodiscard]] bool is_initial(LocationId l) const {
    return std::find(initial.begin(), initial.end(), l) != initial.end();
  }
  [[nodiscard]] bool is_final(LocationId l) const {
    return std::find(final.begin(), final.end(), l) != final.end();
  }

  /// Transitions grouped by source location.
  [[nodiscard]] std::vector<std::vector<std::size_t>> outgoing() const {
    std::vector<std::vector<std::size_t>> out(locations.size());
    for (std::size_t i = 0; i < transitions.size(); ++i)
      if (transitions[i].source < locations.size()) out[transitions[i].source].push_back(i);
    return out;
  }

  friend bool operator==(const BasicTimedAutomaton&, const BasicTimedAutomaton&) = default;

 private:
  [[nodiscard]] std::vector<bool> mask(const std::vector<LocationId>& ids) const {
    std::vector<bool> m(locations.size(), false);
    for (auto l : ids)
      if (l < m.size()) m[l] = true;
    return m;
  }
};

using TimedAutomaton = BasicTimedAutomaton<Acceptance::finite>;
using TimedBuchiAutomaton = BasicTimedAutomaton<Acceptance::buchi>;

/// Timed automaton whose clocks only advance in locations where they are
/// listed as active, and which may take silent transitions (no letter, no
/// delay). Acceptance is by final locations over finite words.
struct StopwatchAutomaton {
  TimedAutomaton body;
  /// active[l] = clocks that advance while in location l.
  std::vector<std::vector<ClockId>> active;

  [[nodiscard]] bool is_active(LocationId l, ClockId c) const {
    const auto& a = active[l];
    return std::find(a.begin(), a.end(), c) != a.end();
  }

  /// Embeds a plain automaton: every clock active everywhere, no silent moves.
  static StopwatchAutomaton from(const TimedAutomaton& ta) {
    StopwatchAutomaton sw{ta, {}};
    std::vector<ClockId> all(ta.clock_count());
    for (ClockId c = 0; c < all.size(); ++c) all[c] = c;
    sw.active.assign(ta.locations.size(), all);
    return sw;
  }

  friend bool operator==(const StopwatchAutomaton&, const StopwatchAutomaton&) = default;
};

template <Acceptance Acc>
BasicTimedAutomaton<(Acc == Acceptance::finite ? Acceptance::buchi : Acceptance::finite)>
reinterpret(const BasicTimedAutomaton<Acc>& a) {
  BasicTimedAutomaton<(Acc == Acceptance::finite ? Acceptance::buchi : Acceptance::finite)> b;
  b.name = a.name;
  b.alphabet = a.alphabet;
  b.locations = a.locations;
  b.clocks = a.clocks;
  b.initial = a.initial;
  b.final = a.final;
  b.transitions = a.transitions;
  return b;
}

enum class ViolationKind {
  duplicate_letter,
  duplicate_location,
  duplicate_clock,
  unknown_location,
  unknown_clock,
  unknown_letter,
  negative_constant,
  silent_transition,
  bad_activity_map,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::duplicate_letter: return "duplicate-letter";
    case ViolationKind::duplicate_location: return "duplicate-location";
    case ViolationKind::duplicate_clock: return "duplicate-clock";
    case ViolationKind::unknown_location: return "unknown-location";
    case ViolationKind::unknown_clock: return "unknown-clock";
    case ViolationKind::unknown_letter: return "unknown-letter";
    case ViolationKind::negative_constant: return "negative-constant";
    case ViolationKind::silent_transition: return "silent-transition";
    case ViolationKind::bad_activity_map: return "bad-activity-map";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string message;
};

namespace detail {

/// Appends primes to repeated names so that all become distinct.
inline void make_unique(std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (auto& n : names) {
    while (seen.contains(n)) n += "'";
    seen.insert(n);
  }
}

template <class Names>
void check_duplicates(const Names& names, ViolationKind kind, const char* what,
                      std::vector<Violation>& out) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) out.push_back({kind, std::string("duplicate ") + what + " '" + n + "'"});
}

template <Acceptance Acc>
std::vector<Violation> validate_impl(const BasicTimedAutomaton<Acc>& a, bool allow_silent) {
  std::vector<Violation> out;
  check_duplicates(a.alphabet, ViolationKind::duplicate_letter, "letter", out);
  check_duplicates(a.locations, ViolationKind::duplicate_location, "location", out);
  check_duplicates(a.clocks, ViolationKind::duplicate_clock, "clock", out);
  const auto nloc = a.locations.size();
  for (auto l : a.initial)
    if (l >= nloc) out.push_back({ViolationKind::unknown_location, "initial location #" + std::to_string(l) + " does not exist"});
  for (auto l : a.final)
    if (l >= nloc) out.push_back({ViolationKind::unknown_location, "final location #" + std::to_string(l) + " does not exist"});
  for (std::size_t i = 0; i < a.transitions.size(); ++i) {
    const auto& t = a.transitions[i];
    const std::string where = "transition #" + std::to_string(i);
    if (t.source >= nloc) out.push_back({ViolationKind::unknown_location, where + " has unknown source"});
    if (t.target >= nloc) out.push_back({ViolationKind::unknown_location, where + " has unknown target"});
    if (t.silent) {
      if (!allow_silent) out.push_back({ViolationKind::silent_transition, where + " is silent"});
    } else if (!contains(a.alphabet, t.letter)) {
      out.push_back({ViolationKind::unknown_letter, where + " reads '" + t.letter + "' outside the alphabet"});
    }
    for (const auto& atom : t.guard.atoms) {
      if (atom.clock >= a.clocks.size())
        out.push_back({ViolationKind::unknown_clock, where + " guards undeclared clock #" + std::to_string(atom.clock)});
      if (atom.constant < 0)
        out.push_back({ViolationKind::negative_constant, where + " compares against negative constant"});
    }
    for (auto c : t.resets)
      if (c >= a.clocks.size())
        out.push_back({ViolationKind::unknown_clock, where + " resets undeclared clock #" + std::to_string(c)});
  }
  return out;
}

}  // namespace detail

/// Lists every broken invariant; an empty result means the automaton is well formed.
template <Acceptance Acc>
std::vector<Violation> validate(const BasicTimedAutomaton<Acc>& a) {
  return detail::validate_impl(a, false);
}

inline std::vector<Violation> validate(const StopwatchAutomaton& a) {
  auto out = detail::validate_impl(a.body, true);
  if (a.active.size() != a.body.locations.size())
    out.push_back({ViolationKind::bad_activity_map, "activity map does not cover every location"});
  for (std::size_t l = 0; l < a.active.size(); ++l)
    for (auto c : a.active[l])
      if (c >= a.body.clocks.size())
        out.push_back({ViolationKind::unknown_clock, "location #" + std::to_string(l) + " activates undeclared clock"});
  return out;
}

template <Acceptance Acc>
std::string a_name(const BasicTimedAutomaton<Acc>& a) { return a.name; }
inline std::string a_name(const StopwatchAutomaton& a) { return a.body.name; }

/// Throws std::invalid_argument carrying the first violation, if any.
template <class Automaton>
void require_valid(const Automaton& a) {
  auto v = validate(a);
  if (!v.empty()) throw std::invalid_argument(a_name(a) + ": " + v.front().message);
}

}  // namespace tempo
