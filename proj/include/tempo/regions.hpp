#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "tempo/automaton.hpp"
#include "tempo/membership.hpp"

namespace tempo {

/// Clock region for bound K. `integral[c]` is the integer part of clock c, or
/// K+1 when the clock exceeds K. `rank[c]` orders fractional parts: 0 means the
/// fractional part is zero (or the clock exceeds K), equal ranks mean equal
/// fractional parts, larger ranks larger fractional parts. Ranks of the
/// nonzero classes are always 1..m, which makes the form canonical.
struct Region {
  std::vector<std::int64_t> integral;
  std::vector<std::size_t> rank;

  [[nodiscard]] std::size_t clocks() const { return integral.size(); }
  [[nodiscard]] std::size_t classes() const {
    return rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
  }
  friend auto operator<=>(const Region&, const Region&) = default;
  friend bool operator==(const Region&, const Region&) = default;
};

namespace regions {

inline Region zero(std::size_t clocks) {
  return {std::vector<std::int64_t>(clocks, 0), std::vector<std::size_t>(clocks, 0)};
}

inline void normalize(Region& r) {
  std::vector<std::size_t> used;
  for (auto k : r.rank)
    if (k != 0) used.push_back(k);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& k : r.rank)
    if (k != 0) k = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), k) - used.begin()) + 1;
}

inline Region of(const std::vector<Rational>& v, std::int64_t k) {
  Region r;
  const Rational bound(static_cast<long>(k));
  std::vector<Rational> fracs;
  for (const auto& x : v) {
    if (x > bound) {
      r.integral.push_back(k + 1);
    } else {
      r.integral.push_back(x.floor().get_si());
      if (!x.is_integer()) fracs.push_back(x.fractional());
    }
  }
  std::sort(fracs.begin(), fracs.end());
  fracs.erase(std::unique(fracs.begin(), fracs.end()), fracs.end());
  for (const auto& x : v) {
    if (x > bound || x.is_integer()) {
      r.rank.push_back(0);
    } else {
      auto f = x.fractional();
      r.rank.push_back(static_cast<std::size_t>(std::lower_bound(fracs.begin(), fracs.end(), f) - fracs.begin()) + 1);
    }
  }
  return r;
}

/// A valuation inside the region: fractional class i of m gets i/(m+1);
/// clocks above K get K+1.
inline std::vector<Rational> representative(const Region& r) {
  const long m = static_cast<long>(r.classes());
  std::vector<Rational> v;
  for (std::size_t c = 0; c < r.clocks(); ++c)
    v.push_back(Rational(static_cast<long>(r.integral[c])) + Rational(static_cast<long>(r.rank[c]), m + 1));
  return v;
}

inline bool is_over(const Region& r, std::size_t c, std::int64_t k) { return r.integral[c] > k; }

/// No bounded clock sits on an integer: a small positive delay stays inside.
inline bool is_open(const Region& r, std::int64_t k) {
  for (std::size_t c = 0; c < r.clocks(); ++c)
    if (!is_over(r, c, k) && r.rank[c] == 0) return false;
  return true;
}

/// The next region reached by letting time pass; the all-unbounded region is
/// its own successor.
inline Region time_successor(const Region& r, std::int64_t k) {
  Region s = r;
  bool on_integer = false;
  for (std::size_t c = 0; c < r.clocks(); ++c)
    if (!is_over(r, c, k) && r.rank[c] == 0) on_integer = true;
  if (on_integer) {
    for (auto& x : s.rank)
      if (x != 0) ++x;
    for (std::size_t c = 0; c < s.clocks(); ++c) {
      if (is_over(r, c, k) || r.rank[c] != 0) continue;
      if (r.integral[c] == k) s.integral[c] = k + 1;
      else s.rank[c] = 1;
    }
  } else {
    const std::size_t top = r.classes();
    if (top == 0) return s;
    for (std::size_t c = 0; c < s.clocks(); ++c) {
      if (r.rank[c] != top) continue;
      s.rank[c] = 0;
      s.integral[c] += 1;
      if (s.integral[c] > k) s.integral[c] = k + 1;
    }
  }
  normalize(s);
  return s;
}

inline Region reset(Region r, const std::vector<ClockId>& clocks) {
  for (auto c : clocks) {
    r.integral[c] = 0;
    r.rank[c] = 0;
  }
  normalize(r);
  return r;
}

/// Regions reachable from `r` by a strictly positive delay, in time order.
inline std::vector<Region> positive_delay_successors(const Region& r, std::int64_t k) {
  std::vector<Region> out;
  if (is_open(r, k)) out.push_back(r);
  Region cur = r;
  for (;;) {
    Region next = time_successor(cur, k);
    if (next == cur) break;
    out.push_back(next);
    cur = std::move(next);
  }
  if (out.empty()) out.push_back(r);  // every clock above K
  return out;
}

/// Closed-form number of regions for n clocks and bound K:
/// sum over m bounded non-integer clocks of C(n,m) K^m (K+2)^(n-m) Fubini(m).
inline std::uint64_t count(std::size_t n, std::int64_t k) {
  std::vector<std::uint64_t> fubini{1};
  std::vector<std::vector<std::uint64_t>> binom(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  for (std::size_t m = 1; m <= n; ++m) {
    std::uint64_t f = 0;
    for (std::size_t j = 1; j <= m; ++j) f += binom[m][j] * fubini[m - j];
    fubini.push_back(f);
  }
  auto pow = [](std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  std::uint64_t total = 0;
  const auto uk = static_cast<std::uint64_t>(k);
  for (std::size_t m = 0; m <= n; ++m) total += binom[n][m] * pow(uk, m) * pow(uk + 2, n - m) * fubini[m];
  return total;
}

}  // namespace regions

struct RegionState {
  LocationId location;
  Region region;
  friend auto operator<=>(const RegionState&, const RegionState&) = default;
};

struct RegionEdge {
  enum class Kind { time, letter };
  Kind kind;
  std::size_t from;
  std::size_t to;
  /// For letter edges: the automaton transition and the region in which it
  /// fired (after a positive delay, before resets).
  std::size_t transition = 0;
  Region fired_in;
};

/// Region graph of a timed automaton. Letter edges include the strictly
/// positive delay that precedes each event; time edges record the successor
/// relation itself.
struct RegionAutomaton {
  std::int64_t bound = 0;
  std::vector<RegionState> states;
  std::vector<RegionEdge> edges;
  std::vector<std::size_t> initial;
  std::vector<bool> accepting;

  [[nodiscard]] std::vector<std::vector<std::size_t>> outgoing(bool letters_only) const {
    std::vector<std::vector<std::size_t>> out(states.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (!letters_only || edges[i].kind == RegionEdge::Kind::letter) out[edges[i].from].push_back(i);
    return out;
  }
};

template <Acceptance Acc>
RegionAutomaton build_region_automaton(const BasicTimedAutomaton<Acc>& a) {
  RegionAutomaton ra;
  ra.bound = a.max_constant();
  const auto k = ra.bound;
  const auto out = a.outgoing();
  const auto is_final = a.final_mask();
  std::map<RegionState, std::size_t> index;
  std::queue<std::size_t> work;
  auto intern = [&](RegionState s) {
    auto [it, fresh] = index.emplace(s, ra.states.size());
    if (fresh) {
      ra.states.push_back(std::move(s));
      ra.accepting.push_back(is_final[ra.states.back().location]);
      work.push(it->second);
    }
    return it->second;
  };
  for (auto l : a.initial) ra.initial.push_back(intern({l, regions::zero(a.clock_count())}));
  while (!work.empty()) {
    const std::size_t id = work.front();
    work.pop();
    const RegionState cur = ra.states[id];
    const auto succ = regions::time_successor(cur.region, k);
    ra.edges.push_back({RegionEdge::Kind::time, id, intern({cur.location, succ}), 0, {}});
    for (const auto& r : regions::positive_delay_successors(cur.region, k)) {
      const auto v = regions::representative(r);
      for (auto ti : out[cur.location]) {
        const auto& t = a.transitions[ti];
        if (t.silent || !t.guard.holds(v)) continue;
        auto to = intern({t.target, regions::reset(r, t.resets)});
        ra.edges.push_back({RegionEdge::Kind::letter, id, to, ti, r});
      }
    }
  }
  return ra;
}

/// No final location is reachable.
template <Acceptance Acc>
bool is_empty(const BasicTimedAutomaton<Acc>& a) {
  const auto ra = build_region_automaton(a);
  return std::none_of(ra.accepting.begin(), ra.accepting.end(), [](bool b) { return b; });
}

/// Büchi emptiness: no reachable strongly connected set of letter edges that
/// visits a repeated location and lets time diverge. Divergence is the
/// progress condition on regions: every clock is reset inside the component
/// or exceeds K somewhere in it.
inline bool is_empty_buchi(const TimedBuchiAutomaton& a) {
  const auto ra = build_region_automaton(a);
  const auto n = ra.states.size();
  const auto k = ra.bound;
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& e : ra.edges)
    if (e.kind == RegionEdge::Kind::letter) succ[e.from].push_back(e.to);
  std::size_t ncomp = 0;
  const auto comp = detail::strongly_connected(succ, ncomp);

  std::vector<bool> has_edge(ncomp, false), has_accepting(ncomp, false);
  std::vector<std::vector<bool>> progress(ncomp, std::vector<bool>(a.clock_count(), false));
  for (std::size_t v = 0; v < n; ++v) {
    if (ra.accepting[v]) has_accepting[comp[v]] = true;
    for (std::size_t c = 0; c < a.clock_count(); ++c)
      if (regions::is_over(ra.states[v].region, c, k)) progress[comp[v]][c] = true;
  }
  for (const auto& e : ra.edges) {
    if (e.kind != RegionEdge::Kind::letter || comp[e.from] != comp[e.to]) continue;
    const auto cc = comp[e.from];
    has_edge[cc] = true;
    for (auto c : a.transitions[e.transition].resets) progress[cc][c] = true;
    for (std::size_t c = 0; c < a.clock_count(); ++c)
      if (regions::is_over(e.fired_in, c, k)) progress[cc][c] = true;
  }
  for (std::size_t cc = 0; cc < ncomp; ++cc) {
    if (!has_edge[cc] || !has_accepting[cc]) continue;
    if (std::all_of(progress[cc].begin(), progress[cc].end(), [](bool b) { return b; })) return false;
  }
  return true;
}

class EmptyLanguage : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Smallest-first candidate delays that walk v through its successor regions:
/// midpoints between consecutive integer crossings, and the crossings.
inline std::optional<Rational> delay_into(const std::vector<Rational>& v, const Region& target, std::int64_t k) {
  std::vector<Rational> breaks;
  const Rational bound(static_cast<long>(k + 1));
  for (const auto& x : v) {
    if (x > Rational(static_cast<long>(k))) continue;
    for (Rational j(mpq_class(x.floor() + 1)); j <= bound; j += Rational(1)) breaks.push_back(j - x);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Rational> candidates;
  Rational prev;
  for (const auto& b : breaks) {
    candidates.push_back((prev + b) / Rational(2));
    candidates.push_back(b);
    prev = b;
  }
  candidates.push_back(prev + Rational(1));
  for (const auto& d : candidates) {
    std::vector<Rational> moved = v;
    for (auto& x : moved) x += d;
    if (regions::of(moved, k) == target) return d;
  }
  return std::nullopt;
}

}  // namespace detail

/// A concrete accepted word, found by a shortest path in the region graph
/// and instantiated with exact rational delays.
template <Acceptance Acc>
TimedWord witness(const BasicTimedAutomaton<Acc>& a) {
  const auto ra = build_region_automaton(a);
  const auto out = ra.outgoing(true);
  const std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(ra.states.size(), unset);
  std::vector<bool> seen(ra.states.size(), false);
  std::queue<std::size_t> q;
  for (auto s : ra.initial) {
    seen[s] = true;
    q.push(s);
  }
  std::optional<std::size_t> goal;
  while (!q.empty() && !goal) {
    auto s = q.front();
    q.pop();
    if (ra.accepting[s]) {
      goal = s;
      break;
    }
    for (auto ei : out[s]) {
      auto t = ra.edges[ei].to;
      if (seen[t]) continue;
      seen[t] = true;
      via[t] = ei;
      q.push(t);
    }
  }
  if (!goal) throw EmptyLanguage(a.name + " accepts no word");
  std::vector<std::size_t> path;
  for (auto s = *goal; via[s] != unset; s = ra.edges[via[s]].from) path.push_back(via[s]);
  std::reverse(path.begin(), path.end());

  TimedWord w;
  std::vector<Rational> v(a.clock_count());
  for (auto ei : path) {
    const auto& e = ra.edges[ei];
    auto d = detail::delay_into(v, e.fired_in, ra.bound);
    if (!d) throw std::logic_error("region path cannot be instantiated");
    const auto& t = a.transitions[e.transition];
    for (auto& x : v) x += *d;
    for (auto c : t.resets) v[c] = Rational();
    w.push(*d, t.letter);
  }
  return w;
}

/// Classical nondeterministic finite automaton over an alphabet of symbols.
struct Nfa {
  Alphabet alphabet;
  std::size_t states = 0;
  std::vector<std::size_t> initial;
  std::vector<bool> accepting;
  struct Edge {
    std::size_t from;
    Symbol letter;
    std::size_t to;
  };
  std::vector<Edge> edges;

  [[nodiscard]] bool accepts(const std::vector<Symbol>& word) const {
    std::set<std::size_t> cur(initial.begin(), initial.end());
    for (const auto& a : word) {
      std::set<std::size_t> next;
      for (const auto& e : edges)
        if (e.letter == a && cur.contains(e.from)) next.insert(e.to);
      cur = std::move(next);
    }
    return std::any_of(cur.begin(), cur.end(), [&](std::size_t s) { return accepting[s]; });
  }
};

/// Letter projection of the region graph: accepts a1...an iff some timed
/// word over those letters is accepted.
template <Acceptance Acc>
Nfa untime(const BasicTimedAutomaton<Acc>& a) {
  const auto ra = build_region_automaton(a);
  Nfa nfa;
  nfa.alphabet = a.alphabet;
  nfa.states = ra.states.size();
  nfa.initial = ra.initial;
  nfa.accepting = ra.accepting;
  std::set<std::tuple<std::size_t, Symbol, std::size_t>> seen;
  for (const auto& e : ra.edges) {
    if (e.kind != RegionEdge::Kind::letter) continue;
    const auto& letter = a.transitions[e.transition].letter;
    if (seen.emplace(e.from, letter, e.to).second) nfa.edges.push_back({e.from, letter, e.to});
  }
  return nfa;
}

/// The NFA as a zero-clock timed automaton (for printing in the text format).
inline TimedAutomaton to_timed_automaton(const Nfa& nfa, std::string name = "untimed") {
  TimedAutomaton a;
  a.name = std::move(name);
  a.alphabet = nfa.alphabet;
  for (std::size_t s = 0; s < nfa.states; ++s) a.locations.push_back("s" + std::to_string(s));
  a.initial = nfa.initial;
  for (std::size_t s = 0; s < nfa.states; ++s)
    if (nfa.accepting[s]) a.final.push_back(s);
  for (const auto& e : nfa.edges) a.add_transition(e.from, e.letter, {}, {}, e.to);
  return a;
}

/// Language equivalence by simultaneous subset construction; returns a
/// distinguishing word when the languages differ.
inline std::optional<std::vector<Symbol>> nfa_difference(const Nfa& x, const Nfa& y) {
  const auto alphabet = merge_alphabets(x.alphabet, y.alphabet);
  using Subset = std::set<std::size_t>;
  auto step = [](const Nfa& n, const Subset& s, const Symbol& a) {
    Subset out;
    for (const auto& e : n.edges)
      if (e.letter == a && s.contains(e.from)) out.insert(e.to);
    return out;
  };
  auto accepting = [](const Nfa& n, const Subset& s) {
    return std::any_of(s.begin(), s.end(), [&](std::size_t q) { return n.accepting[q]; });
  };
  using Pair = std::pair<Subset, Subset>;
  std::map<Pair, std::vector<Symbol>> seen;
  std::queue<Pair> q;
  Pair start{Subset(x.initial.begin(), x.initial.end()), Subset(y.initial.begin(), y.initial.end())};
  seen[start] = {};
  q.push(start);
  while (!q.empty()) {
    auto p = q.front();
    q.pop();
    const auto word = seen[p];
    if (accepting(x, p.first) != accepting(y, p.second)) return word;
    for (const auto& a : alphabet) {
      Pair nxt{step(x, p.first, a), step(y, p.second, a)};
      if (seen.contains(nxt)) continue;
      auto w = word;
      w.push_back(a);
      seen.emplace(nxt, std::move(w));
      q.push(std::move(nxt));
    }
  }
  return std::nullopt;
}

inline bool nfa_equivalent(const Nfa& x, const Nfa& y) { return !nfa_difference(x, y).has_value(); }

}  // namespace tempo
