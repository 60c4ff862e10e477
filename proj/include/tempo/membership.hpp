#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <unordered_set>
#include <vector>

#include "tempo/automaton.hpp"

namespace tempo {

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <Acceptance Acc>
void check_alphabet(const BasicTimedAutomaton<Acc>& a, const TimedWord& w) {
  for (const auto& e : w.events)
    if (!contains(a.alphabet, e.letter))
      throw AlphabetError("letter '" + e.letter + "' is not in the alphabet of " + a.name);
}

}  // namespace detail

/// Optional instrumentation for the finite-word search.
struct RunStats {
  /// Largest number of transitions simultaneously enabled at a reached state.
  std::size_t max_enabled = 0;
  std::size_t states_visited = 0;
};

/// Accepts iff some run over `w` from an initial location ends in a final
/// location. Search over discrete choices, memoized on (location, position,
/// index of each clock's last reset): clock values are determined by those.
template <Acceptance Acc>
bool member(const BasicTimedAutomaton<Acc>& a, const TimedWord& w, RunStats* stats = nullptr) {
  detail::check_alphabet(a, w);
  check_word(w, a.alphabet, DelayPolicy::allow_zero);
  const auto prefix = w.prefix_sums();
  const auto out = a.outgoing();
  const auto is_final = a.final_mask();
  const std::size_t n = w.size();
  const std::size_t nclocks = a.clock_count();

  // key layout: [location, position, last_reset(clock_0), ...]
  std::unordered_set<std::vector<std::size_t>, detail::VectorHash> failed;
  std::vector<Rational> valuation(nclocks);

  std::function<bool(std::vector<std::size_t>&)> search = [&](std::vector<std::size_t>& key) -> bool {
    const std::size_t loc = key[0], pos = key[1];
    if (pos == n) return is_final[loc];
    if (failed.contains(key)) return false;
    if (stats) ++stats->states_visited;
    const std::size_t k = pos + 1;
    for (std::size_t c = 0; c < nclocks; ++c) valuation[c] = prefix[k] - prefix[key[2 + c]];
    std::vector<std::size_t> enabled;
    for (auto ti : out[loc]) {
      const auto& t = a.transitions[ti];
      if (t.silent || t.letter != w[pos].letter) continue;
      if (t.guard.holds(valuation)) enabled.push_back(ti);
    }
    if (stats) stats->max_enabled = std::max(stats->max_enabled, enabled.size());
    for (auto ti : enabled) {
      const auto& t = a.transitions[ti];
      std::vector<std::size_t> next = key;
      next[0] = t.target;
      next[1] = k;
      for (auto c : t.resets) next[2 + c] = k;
      if (search(next)) return true;
    }
    failed.insert(key);
    return false;
  };

  for (auto l : a.initial) {
    std::vector<std::size_t> key(2 + nclocks, 0);
    key[0] = l;
    if (search(key)) return true;
  }
  return false;
}

/// First `count` events of prefix . period^omega.
inline TimedWord unroll(const LassoTimedWord& w, std::size_t count) {
  TimedWord out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& e = i < w.prefix.size() ? w.prefix[i] : w.period[(i - w.prefix.size()) % w.period.size()];
    out.events.push_back(e);
  }
  return out;
}

/// An accepting lasso-shaped run: `stem` leads from `start` to a configuration
/// that `cycle` returns to; the cycle visits a repeated location.
struct LassoRun {
  LocationId start = 0;
  std::vector<std::size_t> stem;   // transition indices, one per event
  std::vector<std::size_t> cycle;  // transition indices, one per event
};

namespace detail {

/// Configuration graph of a TBA over a lasso word: nodes are (location,
/// phase, clock values capped at K+1). Finite because all values are sums of
/// boundedly many delays once capped.
template <Acceptance Acc>
struct LassoGraph {
  struct Node {
    LocationId loc;
    std::size_t phase;
    std::vector<Rational> values;
    auto operator<=>(const Node&) const = default;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges;  // (transition, target node)
  std::vector<std::size_t> roots;

  LassoGraph(const BasicTimedAutomaton<Acc>& a, const LassoTimedWord& w) {
    const std::size_t m = w.prefix.size(), p = w.period.size();
    const Rational cap(static_cast<long>(a.max_constant() + 1));
    const auto out = a.outgoing();
    std::map<Node, std::size_t> index;
    std::queue<std::size_t> work;
    auto intern = [&](Node nd) {
      auto [it, fresh] = index.emplace(nd, nodes.size());
      if (fresh) {
        nodes.push_back(std::move(nd));
        edges.emplace_back();
        work.push(it->second);
      }
      return it->second;
    };
    for (auto l : a.initial) roots.push_back(intern({l, 0, std::vector<Rational>(a.clock_count())}));
    while (!work.empty()) {
      const std::size_t id = work.front();
      work.pop();
      const Node cur = nodes[id];
      const auto& ev = cur.phase < m ? w.prefix[cur.phase] : w.period[cur.phase - m];
      const std::size_t next_phase = cur.phase + 1 < m + p ? cur.phase + 1 : m;
      std::vector<Rational> advanced = cur.values;
      for (auto& v : advanced) {
        v += ev.delay;
        if (v > cap) v = cap;
      }
      for (auto ti : out[cur.loc]) {
        const auto& t = a.transitions[ti];
        if (t.silent || t.letter != ev.letter || !t.guard.holds(advanced)) continue;
        Node nxt{t.target, next_phase, advanced};
        for (auto c : t.resets) nxt.values[c] = Rational();
        auto target = intern(std::move(nxt));
        edges[id].emplace_back(ti, target);
      }
    }
  }
};

/// Tarjan SCC (iterative); returns component id per node.
inline std::vector<std::size_t> strongly_connected(
    const std::vector<std::vector<std::size_t>>& succ, std::size_t& component_count) {
  const std::size_t n = succ.size();
  const std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  component_count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < succ[v].size()) {
        std::size_t w = succ[v][i++];
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = component_count;
          } while (w != v);
          ++component_count;
        }
        std::size_t finished = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
      }
    }
  }
  return comp;
}

}  // namespace detail

/// Searches for an accepting run of a Büchi automaton over an ultimately
/// periodic word. Returns the run when one exists.
template <Acceptance Acc>
std::optional<LassoRun> accepting_lasso_run(const BasicTimedAutomaton<Acc>& a, const LassoTimedWord& w) {
  detail::check_alphabet(a, w.prefix);
  detail::check_alphabet(a, w.period);
  check_lasso(w, a.alphabet, DelayPolicy::allow_zero);

  detail::LassoGraph<Acc> g(a, w);
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t v = 0; v < n; ++v)
    for (auto [ti, t] : g.edges[v]) succ[v].push_back(t);
  std::size_t ncomp = 0;
  auto comp = detail::strongly_connected(succ, ncomp);

  const auto is_final = a.final_mask();
  std::vector<bool> nontrivial(ncomp, false);
  for (std::size_t v = 0; v < n; ++v)
    for (auto t : succ[v])
      if (comp[t] == comp[v]) nontrivial[comp[v]] = true;

  std::optional<std::size_t> anchor;
  for (std::size_t v = 0; v < n && !anchor; ++v)
    if (is_final[g.nodes[v].loc] && nontrivial[comp[v]]) anchor = v;
  if (!anchor) return std::nullopt;

  const std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, unset), via(n, unset);
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> q;
  auto expand = [&](std::size_t v, auto allowed) {
    for (auto [ti, t] : g.edges[v]) {
      if (seen[t] || !allowed(t)) continue;
      seen[t] = true;
      parent[t] = v;
      via[t] = ti;
      q.push(t);
    }
  };

  LassoRun run;
  // Stem: shortest path from an initial configuration to the anchor.
  for (auto r : g.roots) {
    seen[r] = true;
    q.push(r);
  }
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    if (v == *anchor) break;
    expand(v, [](std::size_t) { return true; });
  }
  for (std::size_t v = *anchor; parent[v] != unset; v = parent[v]) run.stem.push_back(via[v]);
  std::reverse(run.stem.begin(), run.stem.end());
  {
    std::size_t v = *anchor;
    while (parent[v] != unset) v = parent[v];
    run.start = g.nodes[v].loc;
  }

  // Cycle: shortest nonempty path from the anchor back to itself inside its SCC.
  std::fill(seen.begin(), seen.end(), false);
  std::fill(parent.begin(), parent.end(), unset);
  q = {};
  const auto target = comp[*anchor];
  auto in_scc = [&](std::size_t t) { return comp[t] == target; };
  expand(*anchor, in_scc);
  while (!q.empty() && !seen[*anchor]) {
    auto v = q.front();
    q.pop();
    expand(v, in_scc);
  }
  std::size_t v = *anchor;
  do {
    run.cycle.push_back(via[v]);
    v = parent[v];
  } while (v != *anchor);
  std::reverse(run.cycle.begin(), run.cycle.end());
  return run;
}

/// Büchi membership for ultimately periodic words: some run visits a
/// repeated location infinitely often.
template <Acceptance Acc>
bool member_lasso(const BasicTimedAutomaton<Acc>& a, const LassoTimedWord& w) {
  return accepting_lasso_run(a, w).has_value();
}

/// Replays a transition sequence from `start` on `w` with exact clock values.
/// Returns the visited locations (start first) or nullopt if a step is illegal.
template <Acceptance Acc>
std::optional<std::vector<LocationId>> replay(const BasicTimedAutomaton<Acc>& a, LocationId start,
                                              const TimedWord& w, const std::vector<std::size_t>& run) {
  if (run.size() != w.size()) return std::nullopt;
  std::vector<Rational> v(a.clock_count());
  std::vector<LocationId> visited{start};
  LocationId loc = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& t = a.transitions.at(run[i]);
    for (auto& x : v) x += w[i].delay;
    if (t.source != loc || t.silent || t.letter != w[i].letter || !t.guard.holds(v)) return std::nullopt;
    for (auto c : t.resets) v[c] = Rational();
    loc = t.target;
    visited.push_back(loc);
  }
  return visited;
}

}  // namespace tempo
