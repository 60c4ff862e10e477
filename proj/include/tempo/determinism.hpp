#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tempo/automaton.hpp"

namespace tempo {

struct DeterminismReport {
  bool deterministic = true;
  bool single_initial = true;
  /// Pairs of transitions (same source, same letter) whose guards can hold together.
  std::vector<std::pair<std::size_t, std::size_t>> overlapping;

  explicit operator bool() const { return deterministic; }
};

/// Single start location, and pairwise exclusive guards for every
/// (location, letter). Exact for diagonal-free conjunctions: two guards
/// overlap iff each clock's intervals intersect.
template <Acceptance Acc>
DeterminismReport is_deterministic(const BasicTimedAutomaton<Acc>& a) {
  DeterminismReport r;
  r.single_initial = a.initial.size() == 1;
  const auto n = a.clock_count();
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    for (std::size_t j = i + 1; j < a.transitions.size(); ++j) {
      const auto& s = a.transitions[i];
      const auto& t = a.transitions[j];
      if (s.source != t.source || s.silent != t.silent || s.letter != t.letter) continue;
      if (overlap(s.guard, t.guard, n)) r.overlapping.emplace_back(i, j);
    }
  r.deterministic = r.single_initial && r.overlapping.empty();
  return r;
}

class NotDeterministic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Elementary intervals of [0, inf) for constant bound K:
/// {0}, (0,1), {1}, ..., {K}, (K, inf).
inline std::vector<ClockInterval> elementary_intervals(std::int64_t k) {
  std::vector<ClockInterval> out;
  for (std::int64_t c = 0; c <= k; ++c) {
    out.push_back(ClockInterval::point(c));
    if (c < k) out.push_back({c, true, c + 1, true});
  }
  out.push_back({k, true, std::nullopt, true});
  return out;
}

inline bool covers(const ClockInterval& big, const ClockInterval& small) {
  return big.intersect(small) == small;
}

/// Joins adjacent elementary intervals [from, to] into one interval.
inline ClockInterval hull(const std::vector<ClockInterval>& elems, std::size_t from, std::size_t to) {
  ClockInterval r;
  r.lower = elems[from].lower;
  r.lower_open = elems[from].lower_open;
  r.upper = elems[to].upper;
  r.upper_open = elems[to].upper_open;
  return r;
}

using Box = std::vector<ClockInterval>;

/// Complement (in [0,inf)^n restricted to dims >= d) of a union of boxes, as
/// disjoint boxes over the remaining dimensions. Adjacent elementary slices
/// with identical residual complements are merged.
inline std::vector<Box> complement_boxes(const std::vector<Box>& boxes, std::size_t d, std::size_t dims,
                                         const std::vector<ClockInterval>& elems) {
  if (d == dims) return boxes.empty() ? std::vector<Box>{Box{}} : std::vector<Box>{};
  std::vector<std::vector<Box>> slices;
  for (const auto& e : elems) {
    std::vector<Box> active;
    for (const auto& b : boxes)
      if (covers(b[d], e)) active.push_back(b);
    slices.push_back(complement_boxes(active, d + 1, dims, elems));
  }
  std::vector<Box> out;
  std::size_t i = 0;
  while (i < elems.size()) {
    std::size_t j = i;
    while (j + 1 < elems.size() && slices[j + 1] == slices[i]) ++j;
    for (const auto& rest : slices[i]) {
      Box b{hull(elems, i, j)};
      b.insert(b.end(), rest.begin(), rest.end());
      out.push_back(std::move(b));
    }
    i = j + 1;
  }
  return out;
}

inline Guard guard_of(const Box& box) {
  Guard g;
  for (ClockId c = 0; c < box.size(); ++c) {
    auto atoms = atoms_for(c, box[c]);
    g.atoms.insert(g.atoms.end(), atoms.begin(), atoms.end());
  }
  return g;
}

}  // namespace detail

/// Makes a deterministic automaton total: adds a non-final sink and, for each
/// (location, letter), a transition to it guarded by the complement of the
/// existing guards. The result has exactly one run on every word.
template <Acceptance Acc>
BasicTimedAutomaton<Acc> complete(const BasicTimedAutomaton<Acc>& det) {
  if (!is_deterministic(det)) throw NotDeterministic(det.name + " is not deterministic");
  BasicTimedAutomaton<Acc> out = det;
  const std::size_t n = det.clock_count();
  const auto elems = detail::elementary_intervals(det.max_constant());
  std::string sink_name = "sink";
  while (out.find_location(sink_name)) sink_name += "_";
  const LocationId sink = out.add_location(sink_name);
  for (LocationId l = 0; l < det.locations.size(); ++l)
    for (const auto& letter : det.alphabet) {
      std::vector<detail::Box> boxes;
      for (const auto& t : det.transitions)
        if (t.source == l && !t.silent && t.letter == letter) boxes.push_back(t.guard.per_clock(n));
      for (const auto& box : detail::complement_boxes(boxes, 0, n, elems))
        out.add_transition(l, letter, detail::guard_of(box), {}, sink);
    }
  for (const auto& letter : det.alphabet) out.add_transition(sink, letter, {}, {}, sink);
  return out;
}

/// Complete, then swap final and non-final locations. Finite-word acceptance
/// only: swapping a Büchi set does not complement.
inline TimedAutomaton complement_det(const TimedAutomaton& det) {
  auto out = complete(det);
  const auto was_final = out.final_mask();
  out.final.clear();
  for (LocationId l = 0; l < out.locations.size(); ++l)
    if (!was_final[l]) out.final.push_back(l);
  out.name = det.name + "_c";
  return out;
}

}  // namespace tempo
