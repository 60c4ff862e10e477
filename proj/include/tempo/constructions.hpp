#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tempo/automaton.hpp"

namespace tempo {

/// One location, initial and final, looping on every letter.
template <Acceptance Acc = Acceptance::finite>
BasicTimedAutomaton<Acc> universal(const Alphabet& sigma, std::string name = "universal") {
  BasicTimedAutomaton<Acc> u;
  u.name = std::move(name);
  u.alphabet = sigma;
  auto q = u.add_location("q0");
  u.initial = {q};
  u.final = {q};
  for (const auto& a : sigma) u.add_transition(q, a, {}, {}, q);
  return u;
}

template <Acceptance Acc = Acceptance::finite>
BasicTimedAutomaton<Acc> empty_language(const Alphabet& sigma, std::string name = "empty") {
  BasicTimedAutomaton<Acc> e;
  e.name = std::move(name);
  e.alphabet = sigma;
  e.initial = {e.add_location("q0")};
  return e;
}

namespace detail {

inline Guard shift(const Guard& g, std::size_t by) {
  Guard out = g;
  for (auto& atom : out.atoms) atom.clock += by;
  return out;
}

inline std::vector<ClockId> shift(std::vector<ClockId> r, std::size_t by) {
  for (auto& c : r) c += by;
  return r;
}

inline std::vector<ClockId> first_clocks(std::size_t n) {
  std::vector<ClockId> r(n);
  for (ClockId c = 0; c < n; ++c) r[c] = c;
  return r;
}

/// Copies `in`'s locations (prefixed) and transitions into `out`, shifting
/// clock indices by `clock_offset`. Returns the location offset.
template <Acceptance AccOut, Acceptance AccIn>
std::size_t embed(BasicTimedAutomaton<AccOut>& out, const BasicTimedAutomaton<AccIn>& in, const std::string& prefix,
                  std::size_t clock_offset) {
  const std::size_t base = out.locations.size();
  for (const auto& l : in.locations) out.locations.push_back(prefix + l);
  for (auto t : in.transitions) {
    t.source += base;
    t.target += base;
    t.guard = shift(t.guard, clock_offset);
    t.resets = shift(t.resets, clock_offset);
    out.transitions.push_back(std::move(t));
  }
  return base;
}

/// Clock names when two automata share clock indices.
template <Acceptance A1, Acceptance A2>
std::vector<std::string> shared_clocks(const BasicTimedAutomaton<A1>& a, const BasicTimedAutomaton<A2>& b,
                                       std::size_t extra = 0) {
  std::vector<std::string> names = a.clocks;
  for (std::size_t i = names.size(); i < b.clock_count(); ++i) names.push_back(b.clocks[i]);
  for (std::size_t i = 0; i < extra; ++i) names.push_back("d" + std::to_string(i));
  make_unique(names);
  return names;
}

}  // namespace detail

/// Language union. Both sides keep their own locations; clocks are shared by
/// index since a run only ever lives in one side.
template <Acceptance Acc>
BasicTimedAutomaton<Acc> union_of(const BasicTimedAutomaton<Acc>& a, const BasicTimedAutomaton<Acc>& b) {
  BasicTimedAutomaton<Acc> u;
  u.name = a.name + "_or_" + b.name;
  u.alphabet = merge_alphabets(a.alphabet, b.alphabet);
  u.clocks = a.clock_count() >= b.clock_count() ? detail::shared_clocks(a, b) : detail::shared_clocks(b, a);
  const auto oa = detail::embed(u, a, "1_", 0);
  const auto ob = detail::embed(u, b, "2_", 0);
  for (auto l : a.initial) u.initial.push_back(oa + l);
  for (auto l : b.initial) u.initial.push_back(ob + l);
  for (auto l : a.final) u.final.push_back(oa + l);
  for (auto l : b.final) u.final.push_back(ob + l);
  detail::make_unique(u.locations);
  return u;
}

/// Intersection by synchronous product over disjoint clocks. Only reachable
/// location pairs are kept.
inline TimedAutomaton product(const TimedAutomaton& a, const TimedAutomaton& b) {
  TimedAutomaton p;
  p.name = a.name + "_and_" + b.name;
  p.alphabet = merge_alphabets(a.alphabet, b.alphabet);
  for (const auto& c : a.clocks) p.clocks.push_back("1_" + c);
  for (const auto& c : b.clocks) p.clocks.push_back("2_" + c);
  detail::make_unique(p.clocks);
  const std::size_t na = a.clock_count();
  const auto oa = a.outgoing(), ob = b.outgoing();
  const auto fa = a.final_mask(), fb = b.final_mask();
  std::map<std::pair<LocationId, LocationId>, LocationId> index;
  std::queue<std::pair<LocationId, LocationId>> work;
  auto intern = [&](LocationId x, LocationId y) {
    auto [it, fresh] = index.emplace(std::make_pair(x, y), p.locations.size());
    if (fresh) {
      p.locations.push_back(a.locations[x] + "_" + b.locations[y]);
      if (fa[x] && fb[y]) p.final.push_back(it->second);
      work.emplace(x, y);
    }
    return it->second;
  };
  for (auto x : a.initial)
    for (auto y : b.initial) p.initial.push_back(intern(x, y));
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop();
    const auto from = index.at({x, y});
    for (auto i : oa[x])
      for (auto j : ob[y]) {
        const auto& s = a.transitions[i];
        const auto& t = b.transitions[j];
        if (s.letter != t.letter) continue;
        auto g = s.guard && detail::shift(t.guard, na);
        if (!g.satisfiable(p.clock_count())) continue;
        auto r = s.resets;
        for (auto c : t.resets) r.push_back(c + na);
        p.add_transition(from, s.letter, std::move(g), std::move(r), intern(s.target, t.target));
      }
  }
  detail::make_unique(p.locations);
  return p;
}

/// X . (R x {sep}) . Y: a `sep` step with any delay from each final location
/// of `a` to each initial location of `b`, resetting `b`'s clocks. Clocks are
/// shared by index: after the separator only `b`'s clocks matter, and those
/// are freshly reset.
template <Acceptance AccB>
BasicTimedAutomaton<AccB> concat_sep(const TimedAutomaton& a, const Symbol& sep, const BasicTimedAutomaton<AccB>& b) {
  BasicTimedAutomaton<AccB> c;
  c.name = a.name + "_" + sep + "_" + b.name;
  c.alphabet = merge_alphabets(merge_alphabets(a.alphabet, b.alphabet), {sep});
  c.clocks = a.clock_count() >= b.clock_count() ? detail::shared_clocks(a, b) : detail::shared_clocks(b, a);
  const auto oa = detail::embed(c, a, "1_", 0);
  const auto ob = detail::embed(c, b, "2_", 0);
  for (auto l : a.initial) c.initial.push_back(oa + l);
  for (auto l : b.final) c.final.push_back(ob + l);
  for (auto f : a.final)
    for (auto i : b.initial) c.add_transition(oa + f, sep, {}, detail::first_clocks(b.clock_count()), ob + i);
  detail::make_unique(c.locations);
  return c;
}

/// X . delay . sep . Y: like concat_sep but the delay before `sep` is pinned
/// by a dedicated clock reset on every event of `a`.
template <Acceptance AccB>
BasicTimedAutomaton<AccB> concat_fixed(const TimedAutomaton& a, std::int64_t delay, const Symbol& sep,
                                       const BasicTimedAutomaton<AccB>& b) {
  BasicTimedAutomaton<AccB> c;
  c.name = a.name + "_" + std::to_string(delay) + sep + "_" + b.name;
  c.alphabet = merge_alphabets(merge_alphabets(a.alphabet, b.alphabet), {sep});
  const ClockId d = a.clock_count();
  c.clocks = a.clocks;
  c.clocks.push_back("delay");
  for (std::size_t i = c.clocks.size(); i < b.clock_count(); ++i) c.clocks.push_back(b.clocks[i]);
  detail::make_unique(c.clocks);
  const auto oa = detail::embed(c, a, "1_", 0);
  for (auto& t : c.transitions) t.resets.push_back(d);
  const auto ob = detail::embed(c, b, "2_", 0);
  for (auto l : a.initial) c.initial.push_back(oa + l);
  for (auto l : b.final) c.final.push_back(ob + l);
  const Guard pinned{{d, Relation::eq, delay}};
  for (auto f : a.final)
    for (auto i : b.initial) c.add_transition(oa + f, sep, pinned, detail::first_clocks(b.clock_count()), ob + i);
  detail::make_unique(c.locations);
  return c;
}

namespace detail {

inline void require_letter(const Alphabet& sigma, const Symbol& a) {
  if (!contains(sigma, a)) throw std::invalid_argument("letter '" + a + "' is not in the alphabet");
}

inline void require_fresh(const Alphabet& sigma, const Symbol& c) {
  if (contains(sigma, c)) throw std::invalid_argument("separator '" + c + "' already occurs in the alphabet");
}

}  // namespace detail

/// a-words with some pair of a's exactly 1 apart: guess the first a of the
/// pair (reset x), then fire on x = 1.
inline TimedAutomaton gadget_A(const Alphabet& sigma = {"a"}, const Symbol& a = "a") {
  detail::require_letter(sigma, a);
  TimedAutomaton g;
  g.name = "A";
  g.alphabet = sigma;
  const ClockId x = g.add_clock("x");
  const auto q0 = g.add_location("q0"), q1 = g.add_location("q1"), q2 = g.add_location("q2");
  g.initial = {q0};
  g.final = {q2};
  g.add_transition(q0, a, {}, {}, q0);
  g.add_transition(q0, a, {}, {x}, q1);
  g.add_transition(q1, a, {}, {}, q1);
  g.add_transition(q1, a, {{x, Relation::eq, 1}}, {}, q2);
  g.add_transition(q2, a, {}, {}, q2);
  return g;
}

/// a-words with at least n distinct pairs of a's exactly 1 apart, with n
/// clocks. A location records the completed pairs k and the running clocks;
/// each a may close any running pairs at clock = 1 and open one new pair on
/// the lowest free clock.
inline TimedAutomaton gadget_An(const Alphabet& sigma, const Symbol& a, std::size_t n) {
  detail::require_letter(sigma, a);
  if (n == 0 || n > 16) throw std::invalid_argument("gadget_An needs 1 <= n <= 16");
  TimedAutomaton g;
  g.name = "A" + std::to_string(n);
  g.alphabet = sigma;
  for (std::size_t i = 1; i <= n; ++i) g.add_clock("x" + std::to_string(i));

  using State = std::pair<std::size_t, std::uint32_t>;  // (completed, running mask)
  std::map<State, LocationId> index;
  std::queue<State> work;
  const LocationId accept = g.add_location("k" + std::to_string(n));
  g.final = {accept};
  g.add_transition(accept, a, {}, {}, accept);
  auto intern = [&](State s) {
    if (s.first >= n) return accept;
    auto [it, fresh] = index.emplace(s, g.locations.size());
    if (fresh) {
      std::string name = "k" + std::to_string(s.first) + "_";
      for (std::size_t c = 0; c < n; ++c)
        if (s.second >> c & 1U) name += "x" + std::to_string(c + 1);
      g.locations.push_back(name);
      work.push(s);
    }
    return it->second;
  };
  g.initial = {intern({0, 0})};
  while (!work.empty()) {
    const auto [k, running] = work.front();
    work.pop();
    const auto from = index.at({k, running});
    // Enumerate subsets `done` of the running clocks.
    for (std::uint32_t done = running;; done = (done - 1) & running) {
      Guard guard;
      for (std::size_t c = 0; c < n; ++c)
        if (done >> c & 1U) guard.atoms.push_back({c, Relation::eq, 1});
      const std::size_t k2 = k + static_cast<std::size_t>(std::popcount(done));
      const std::uint32_t rest = running & ~done;
      if (k2 >= n) {
        g.add_transition(from, a, guard, {}, accept);
      } else {
        if (k2 + static_cast<std::size_t>(std::popcount(rest)) <= n)
          g.add_transition(from, a, guard, {}, intern({k2, rest}));
        const auto free = static_cast<std::size_t>(std::countr_one(rest));
        if (free < n && k2 + static_cast<std::size_t>(std::popcount(rest)) + 1 <= n)
          g.add_transition(from, a, guard, {free}, intern({k2, rest | (1U << free)}));
      }
      if (done == 0) break;
    }
  }
  return g;
}

/// t1 a 1 a t2 a with t1 + t2 = 1 (all delays positive).
inline TimedAutomaton gadget_R1() {
  TimedAutomaton g;
  g.name = "R1";
  g.alphabet = {"a", "b"};
  const ClockId x = g.add_clock("x"), y = g.add_clock("y");
  for (int i = 0; i < 4; ++i) g.add_location("q" + std::to_string(i));
  g.initial = {0};
  g.final = {3};
  g.add_transition(0, "a", {{x, Relation::gt, 0}}, {y}, 1);
  g.add_transition(1, "a", {{y, Relation::eq, 1}}, {y}, 2);
  g.add_transition(2, "a", {{x, Relation::eq, 2}, {y, Relation::gt, 0}}, {}, 3);
  return g;
}

/// 1 b s b with s positive.
inline TimedAutomaton gadget_R2() {
  TimedAutomaton g;
  g.name = "R2";
  g.alphabet = {"a", "b"};
  const ClockId z = g.add_clock("z");
  for (int i = 0; i < 3; ++i) g.add_location("q" + std::to_string(i));
  g.initial = {0};
  g.final = {2};
  g.add_transition(0, "b", {{z, Relation::eq, 1}}, {z}, 1);
  g.add_transition(1, "b", {{z, Relation::gt, 0}}, {}, 2);
  return g;
}

/// t1 a 1 b s b 1 a t2 a with t1, s, t2 positive.
inline TimedAutomaton gadget_R3() {
  TimedAutomaton g;
  g.name = "R3";
  g.alphabet = {"a", "b"};
  const ClockId z = g.add_clock("z");
  for (int i = 0; i < 6; ++i) g.add_location("q" + std::to_string(i));
  g.initial = {0};
  g.final = {5};
  g.add_transition(0, "a", {{z, Relation::gt, 0}}, {z}, 1);
  g.add_transition(1, "b", {{z, Relation::eq, 1}}, {z}, 2);
  g.add_transition(2, "b", {{z, Relation::gt, 0}}, {z}, 3);
  g.add_transition(3, "a", {{z, Relation::eq, 1}}, {z}, 4);
  g.add_transition(4, "a", {{z, Relation::gt, 0}}, {}, 5);
  return g;
}

/// Words over sigma + {c} with no c or at least two c's. Deterministic, no
/// clocks. As a Büchi automaton it accepts the infinite words with the same
/// property.
template <Acceptance Acc = Acceptance::finite>
BasicTimedAutomaton<Acc> gadget_L2(const Alphabet& sigma, const Symbol& c) {
  detail::require_fresh(sigma, c);
  BasicTimedAutomaton<Acc> g;
  g.name = "L2";
  g.alphabet = merge_alphabets(sigma, {c});
  const auto n0 = g.add_location("none"), n1 = g.add_location("one"), n2 = g.add_location("many");
  g.initial = {n0};
  g.final = {n0, n2};
  for (const auto& a : sigma) {
    g.add_transition(n0, a, {}, {}, n0);
    g.add_transition(n1, a, {}, {}, n1);
  }
  g.add_transition(n0, c, {}, {}, n1);
  g.add_transition(n1, c, {}, {}, n2);
  for (const auto& a : g.alphabet) g.add_transition(n2, a, {}, {}, n2);
  return g;
}

template <Acceptance Acc>
struct ReductionReport {
  BasicTimedAutomaton<Acc> built;
  std::vector<BasicTimedAutomaton<Acc>> components;
  std::size_t clocks = 0;
  std::int64_t max_constant = 0;
};

namespace detail {

template <Acceptance Acc>
ReductionReport<Acc> assemble(std::string name, std::vector<BasicTimedAutomaton<Acc>> parts) {
  ReductionReport<Acc> r;
  r.built = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) r.built = union_of(r.built, parts[i]);
  r.built.name = std::move(name);
  r.components = std::move(parts);
  r.clocks = r.built.clock_count();
  r.max_constant = r.built.max_constant();
  return r;
}

inline Symbol pick_letter(const Alphabet& sigma, const std::optional<Symbol>& a) {
  if (a) return *a;
  if (contains(sigma, "a")) return "a";
  if (sigma.empty()) throw std::invalid_argument("alphabet is empty");
  return sigma.front();
}

}  // namespace detail

/// L.(R x {c}).(R x S)*  +  words with no c or >= 2 c's  +  (R x S)*.(R x {c}).A
inline ReductionReport<Acceptance::finite> build_thm1(const TimedAutomaton& l, const Symbol& c,
                                                      std::optional<Symbol> a = std::nullopt) {
  require_valid(l);
  const auto& sigma = l.alphabet;
  detail::require_fresh(sigma, c);
  const auto letter = detail::pick_letter(sigma, a);
  auto l1 = concat_sep(l, c, universal(sigma));
  auto l2 = gadget_L2(sigma, c);
  auto l3 = concat_sep(universal(sigma), c, gadget_A(sigma, letter));
  l1.name = "L1";
  l3.name = "L3";
  return detail::assemble<Acceptance::finite>("thm1", {l1, l2, l3});
}

/// As build_thm1 with A_n in place of A; needs clocks(L) <= n.
inline ReductionReport<Acceptance::finite> build_thm2(const TimedAutomaton& l, std::size_t n, const Symbol& c,
                                                      std::optional<Symbol> a = std::nullopt) {
  require_valid(l);
  if (l.clock_count() > n)
    throw std::invalid_argument(l.name + " has " + std::to_string(l.clock_count()) + " clocks, more than n = " +
                                std::to_string(n));
  const auto& sigma = l.alphabet;
  detail::require_fresh(sigma, c);
  const auto letter = detail::pick_letter(sigma, a);
  auto v1 = concat_sep(l, c, universal(sigma));
  auto v2 = gadget_L2(sigma, c);
  auto v3 = concat_sep(universal(sigma), c, gadget_An(sigma, letter, n));
  v1.name = "V1";
  v3.name = "V3";
  return detail::assemble<Acceptance::finite>("thm2", {v1, v2, v3});
}

/// L.(R x {c}).(R x S)*  +  words with no c or >= 2 c's  +  (R x S)*.1.c.R1
inline ReductionReport<Acceptance::finite> build_thm4(const TimedAutomaton& l, const Symbol& c) {
  require_valid(l);
  Alphabet ab{"a", "b"};
  if (merge_alphabets(l.alphabet, {}) != ab) throw std::invalid_argument("build_thm4 needs alphabet {a, b}");
  detail::require_fresh(ab, c);
  auto l1 = concat_sep(l, c, universal(ab));
  auto l2 = gadget_L2(ab, c);
  auto l3 = concat_fixed(universal(ab), 1, c, gadget_R1());
  l1.name = "L1";
  l3.name = "L3";
  return detail::assemble<Acceptance::finite>("thm4", {l1, l2, l3});
}

/// Over infinite words: A.(R x {c}).(R x S)^w  +  no c or >= 2 c's  +
/// (R x S)*.(R x {c}).L
inline ReductionReport<Acceptance::buchi> build_tba_reduction(const TimedBuchiAutomaton& l, const Symbol& c,
                                                              std::optional<Symbol> a = std::nullopt) {
  require_valid(l);
  const auto& sigma = l.alphabet;
  detail::require_fresh(sigma, c);
  const auto letter = detail::pick_letter(sigma, a);
  auto l1 = concat_sep(gadget_A(sigma, letter), c, universal<Acceptance::buchi>(sigma));
  auto l2 = gadget_L2<Acceptance::buchi>(sigma, c);
  auto l3 = concat_sep(universal(sigma), c, l);
  l1.name = "L1";
  l3.name = "L3";
  return detail::assemble<Acceptance::buchi>("tba", {l1, l2, l3});
}

}  // namespace tempo
