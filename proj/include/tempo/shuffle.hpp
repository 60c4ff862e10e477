#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tempo/automaton.hpp"
#include "tempo/stopwatch.hpp"

namespace tempo {

enum class Side { left, right };

/// How w splits into x and y: each event of w goes to one side, and each gap
/// of w is divided into time spent by x and time spent by y.
struct ShuffleDecomposition {
  std::vector<Side> assignment;
  struct Split {
    Rational dx;
    Rational dy;
  };
  std::vector<Split> splits;
};

namespace detail {

/// Shuffle search. Time in w is shared: x's clock runs only in x-factors,
/// y's only in y-factors. When event i of w belongs to x, x must have
/// consumed exactly its pending delay, so dx = pending_x and the rest of the
/// gap goes to y (at most y's pending delay). The split is therefore forced
/// by the assignment, and the state (i, j, pending_x) determines everything.
class ShuffleSearch {
 public:
  ShuffleSearch(const TimedWord& w, const TimedWord& x, const TimedWord& y) : w_(w), x_(x), y_(y) {}

  std::optional<ShuffleDecomposition> run() {
    if (w_.size() != x_.size() + y_.size()) return std::nullopt;
    ShuffleDecomposition d;
    if (search(0, 0, pending(x_, 0), pending(y_, 0), d)) return d;
    return std::nullopt;
  }

 private:
  static Rational pending(const TimedWord& v, std::size_t j) { return j < v.size() ? v[j].delay : Rational(); }

  bool search(std::size_t i, std::size_t j, const Rational& px, const Rational& py, ShuffleDecomposition& d) {
    if (i == w_.size()) return true;
    const std::size_t k = i - j;
    auto key = std::make_tuple(i, j, px);
    if (failed_.contains(key)) return false;
    const auto& ev = w_[i];
    if (j < x_.size() && x_[j].letter == ev.letter && px <= ev.delay && ev.delay - px <= py) {
      const Rational dy = ev.delay - px;
      d.assignment.push_back(Side::left);
      d.splits.push_back({px, dy});
      if (search(i + 1, j + 1, pending(x_, j + 1), py - dy, d)) return true;
      d.assignment.pop_back();
      d.splits.pop_back();
    }
    if (k < y_.size() && y_[k].letter == ev.letter && py <= ev.delay && ev.delay - py <= px) {
      const Rational dx = ev.delay - py;
      d.assignment.push_back(Side::right);
      d.splits.push_back({dx, py});
      if (search(i + 1, j, px - dx, pending(y_, k + 1), d)) return true;
      d.assignment.pop_back();
      d.splits.pop_back();
    }
    failed_.insert(key);
    return false;
  }

  const TimedWord& w_;
  const TimedWord& x_;
  const TimedWord& y_;
  std::set<std::tuple<std::size_t, std::size_t, Rational>> failed_;
};

}  // namespace detail

/// Decides whether w is in the shuffle of x and y; returns a decomposition
/// when it is.
inline std::optional<ShuffleDecomposition> shuffle_decompose(const TimedWord& w, const TimedWord& x,
                                                             const TimedWord& y) {
  return detail::ShuffleSearch(w, x, y).run();
}

inline bool shuffle_member(const TimedWord& w, const TimedWord& x, const TimedWord& y) {
  return shuffle_decompose(w, x, y).has_value();
}

/// Reads the two factors back out of a decomposition of w.
inline std::pair<TimedWord, TimedWord> factors(const TimedWord& w, const ShuffleDecomposition& d) {
  TimedWord x, y;
  Rational tx, ty;
  for (std::size_t i = 0; i < w.size(); ++i) {
    tx += d.splits[i].dx;
    ty += d.splits[i].dy;
    if (d.assignment[i] == Side::left) {
      x.push(tx, w[i].letter);
      tx = Rational();
    } else {
      y.push(ty, w[i].letter);
      ty = Rational();
    }
  }
  return {x, y};
}

/// Stopwatch automaton for L(A) shuffled with L(B).
///
/// Locations are (p, q, L) and (p, q, R) while both components still have
/// events to read, A(p) once B has read its last event, B(q) once A has, and
/// a final location `done`. Time flows into A's clocks in L and A(p), into
/// B's in R and B(q); silent moves flip between L and R. The step that reads
/// a component's last event commits to the single-component phase, so no
/// time is lost after a component has finished. Two extra clocks, reset on
/// their component's events, keep every component delay positive.
inline StopwatchAutomaton shuffle_automaton(const TimedAutomaton& a, const TimedAutomaton& b) {
  require_valid(a);
  require_valid(b);
  StopwatchAutomaton sw;
  auto& c = sw.body;
  c.name = a.name + "_shuffle_" + b.name;
  c.alphabet = merge_alphabets(a.alphabet, b.alphabet);

  const std::size_t na = a.clock_count(), nb = b.clock_count();
  for (const auto& x : a.clocks) c.clocks.push_back("A_" + x);
  for (const auto& x : b.clocks) c.clocks.push_back("B_" + x);
  const ClockId pa = na + nb, pb = na + nb + 1;
  c.clocks.push_back("A_pos");
  c.clocks.push_back("B_pos");
  detail::make_unique(c.clocks);

  std::vector<ClockId> act_a, act_b;
  for (ClockId x = 0; x < na; ++x) act_a.push_back(x);
  act_a.push_back(pa);
  for (ClockId x = 0; x < nb; ++x) act_b.push_back(na + x);
  act_b.push_back(pb);

  const std::size_t la = a.locations.size(), lb = b.locations.size();
  auto both = [&](LocationId p, LocationId q, Side s) { return (p * lb + q) * 2 + (s == Side::left ? 0 : 1); };
  auto only_a = [&](LocationId p) { return 2 * la * lb + p; };
  auto only_b = [&](LocationId q) { return 2 * la * lb + la + q; };
  const LocationId done = 2 * la * lb + la + lb;

  for (LocationId p = 0; p < la; ++p)
    for (LocationId q = 0; q < lb; ++q) {
      c.locations.push_back(a.locations[p] + "_" + b.locations[q] + "_L");
      c.locations.push_back(a.locations[p] + "_" + b.locations[q] + "_R");
      sw.active.push_back(act_a);
      sw.active.push_back(act_b);
    }
  for (LocationId p = 0; p < la; ++p) {
    c.locations.push_back(a.locations[p] + "_Aonly");
    sw.active.push_back(act_a);
  }
  for (LocationId q = 0; q < lb; ++q) {
    c.locations.push_back(b.locations[q] + "_Bonly");
    sw.active.push_back(act_b);
  }
  c.locations.push_back("done");
  detail::make_unique(c.locations);
  sw.active.emplace_back();
  c.final.push_back(done);

  const auto fa = a.final_mask(), fb = b.final_mask();
  for (auto p : a.initial)
    for (auto q : b.initial) {
      c.initial.push_back(both(p, q, Side::left));
      if (fb[q]) c.initial.push_back(only_a(p));
      if (fa[p]) c.initial.push_back(only_b(q));
      if (fa[p] && fb[q]) c.initial.push_back(done);
    }
  std::sort(c.initial.begin(), c.initial.end());
  c.initial.erase(std::unique(c.initial.begin(), c.initial.end()), c.initial.end());

  auto shift = [](const Guard& g, std::size_t by) {
    Guard out = g;
    for (auto& atom : out.atoms) atom.clock += by;
    return out;
  };
  auto shifted = [](std::vector<ClockId> r, std::size_t by) {
    for (auto& x : r) x += by;
    return r;
  };
  const Guard pos_a{{pa, Relation::gt, 0}};
  const Guard pos_b{{pb, Relation::gt, 0}};

  for (const auto& t : a.transitions) {
    auto g = t.guard && pos_a;
    auto r = t.resets;
    r.push_back(pa);
    for (LocationId q = 0; q < lb; ++q) {
      c.add_transition(both(t.source, q, Side::left), t.letter, g, r, both(t.target, q, Side::left));
      if (fa[t.target]) c.add_transition(both(t.source, q, Side::left), t.letter, g, r, only_b(q));
    }
    c.add_transition(only_a(t.source), t.letter, g, r, only_a(t.target));
    if (fa[t.target]) c.add_transition(only_a(t.source), t.letter, g, r, done);
  }
  for (const auto& t : b.transitions) {
    auto g = shift(t.guard, na) && pos_b;
    auto r = shifted(t.resets, na);
    r.push_back(pb);
    for (LocationId p = 0; p < la; ++p) {
      c.add_transition(both(p, t.source, Side::right), t.letter, g, r, both(p, t.target, Side::right));
      if (fb[t.target]) c.add_transition(both(p, t.source, Side::right), t.letter, g, r, only_a(p));
    }
    c.add_transition(only_b(t.source), t.letter, g, r, only_b(t.target));
    if (fb[t.target]) c.add_transition(only_b(t.source), t.letter, g, r, done);
  }
  for (LocationId p = 0; p < la; ++p)
    for (LocationId q = 0; q < lb; ++q) {
      Transition flip{both(p, q, Side::left), std::string(kSilentLetter), {}, {}, both(p, q, Side::right), true};
      c.transitions.push_back(flip);
      std::swap(flip.source, flip.target);
      c.transitions.push_back(flip);
    }
  return sw;
}

}  // namespace tempo
