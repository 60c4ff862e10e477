#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tempo/automaton.hpp"
#include "tempo/linear.hpp"

namespace tempo {

struct StopwatchOptions {
  /// Maximum number of guarded or resetting silent transitions per event gap.
  std::size_t silent_cap = 8;
};

enum class Verdict { accept, reject, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::accept: return "accept";
    case Verdict::reject: return "reject";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// The silent-transition cap was reached before the search could conclude.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Membership search for stopwatch automata.
///
/// Inside one gap of the word the run alternates delays and silent moves.
/// A silent transition with guard TRUE and no resets ("pure") changes only
/// where subsequent time accrues, so a chain of pure moves is summarized by
/// its end location and the set of activity signatures it passes through:
/// each signature gets one nonnegative time variable. Other silent moves are
/// enumerated explicitly, at most `silent_cap` per gap. Clock values are sums
/// of time variables; guards become linear constraints whose exact
/// feasibility decides each branch.
class StopwatchSearch {
 public:
  StopwatchSearch(const StopwatchAutomaton& a, const TimedWord& w, StopwatchOptions opt)
      : a_(a), w_(w), opt_(opt), out_(a.body.outgoing()), final_(a.body.final_mask()) {
    std::map<std::vector<ClockId>, std::size_t> ids;
    for (const auto& act : a.active) {
      auto key = act;
      std::sort(key.begin(), key.end());
      auto [it, fresh] = ids.emplace(key, signatures_.size());
      if (fresh) signatures_.push_back(key);
      signature_of_.push_back(it->second);
    }
  }

  Verdict run() {
    for (auto l : a_.body.initial) {
      Branch b{l, 0, LinearSystem{}, std::vector<std::vector<std::size_t>>(a_.body.clock_count())};
      if (explore(b)) return Verdict::accept;
    }
    return cap_hit_ ? Verdict::inconclusive : Verdict::reject;
  }

 private:
  struct Branch {
    LocationId loc;
    std::size_t pos;
    LinearSystem sys;
    std::vector<std::vector<std::size_t>> clocks;  // variables summed by each clock
  };

  struct Closure {
    LocationId end;
    std::vector<std::size_t> signatures;
  };

  [[nodiscard]] static bool is_pure(const Transition& t) { return t.silent && t.guard.is_true() && t.resets.empty(); }

  const std::vector<Closure>& pure_closure(LocationId from) {
    if (closures_.empty()) closures_.resize(a_.body.locations.size());
    if (auto& cached = closures_[from]) return *cached;
    std::set<std::pair<LocationId, std::vector<std::size_t>>> seen;
    std::vector<Closure> order;
    std::vector<Closure> work{{from, {signature_of_[from]}}};
    while (!work.empty()) {
      auto cur = work.back();
      work.pop_back();
      if (!seen.emplace(cur.end, cur.signatures).second) continue;
      order.push_back(cur);
      for (auto ti : out_[cur.end]) {
        const auto& t = a_.body.transitions[ti];
        if (!is_pure(t)) continue;
        auto sigs = cur.signatures;
        auto s = signature_of_[t.target];
        if (std::find(sigs.begin(), sigs.end(), s) == sigs.end()) {
          sigs.push_back(s);
          std::sort(sigs.begin(), sigs.end());
        }
        work.push_back({t.target, std::move(sigs)});
      }
    }
    closures_[from] = std::move(order);
    return *closures_[from];
  }

  /// Adds the guard as constraints; returns false if trivially violated.
  static bool constrain(LinearSystem& sys, const std::vector<std::vector<std::size_t>>& clocks, const Guard& g) {
    for (const auto& atom : g.atoms) {
      const auto& vars = clocks[atom.clock];
      Rational c(static_cast<long>(atom.constant));
      if (vars.empty()) {
        if (!compare(Rational(), atom.rel, c)) return false;
        continue;
      }
      LinearSystem::Terms terms;
      for (auto v : vars) terms.emplace_back(v, Rational(1));
      sys.add(std::move(terms), atom.rel, c);
    }
    return true;
  }

  /// Time variables of one pure segment, added to each clock active there.
  void open_segment(Branch& b, const Closure& c, std::vector<std::size_t>& gap_vars) const {
    for (auto s : c.signatures) {
      auto v = b.sys.add_variable();
      gap_vars.push_back(v);
      for (auto clock : signatures_[s]) b.clocks[clock].push_back(v);
    }
  }

  static void close_gap(LinearSystem& sys, const std::vector<std::size_t>& gap_vars, const Rational& d, Relation rel) {
    LinearSystem::Terms terms;
    for (auto v : gap_vars) terms.emplace_back(v, Rational(1));
    if (terms.empty()) {
      // A gap spent nowhere must be empty; encode as 0 rel d.
      sys.add({}, rel, d);
      return;
    }
    sys.add(std::move(terms), rel, d);
  }

  bool explore(const Branch& start) { return explore_gap(start, start.loc, {}, 0); }

  // Continues the silent chain of the current gap from `loc`.
  bool explore_gap(const Branch& b, LocationId loc, std::vector<std::size_t> gap_vars, std::size_t impure_used) {
    const bool last = b.pos == w_.size();
    const Rational d = last ? Rational() : w_[b.pos].delay;
    for (const auto& closure : pure_closure(loc)) {
      Branch seg = b;
      auto vars = gap_vars;
      open_segment(seg, closure, vars);

      if (last) {
        if (final_[closure.end]) {
          Branch fin = seg;
          close_gap(fin.sys, vars, d, Relation::eq);
          if (fin.sys.feasible()) return true;
        }
      } else {
        for (auto ti : out_[closure.end]) {
          const auto& t = a_.body.transitions[ti];
          if (t.silent || t.letter != w_[b.pos].letter) continue;
          Branch next = seg;
          close_gap(next.sys, vars, d, Relation::eq);
          if (!constrain(next.sys, next.clocks, t.guard)) continue;
          if (!next.sys.feasible()) continue;
          for (auto c : t.resets) next.clocks[c].clear();
          next.loc = t.target;
          next.pos = b.pos + 1;
          if (explore_gap(next, next.loc, {}, 0)) return true;
        }
      }

      for (auto ti : out_[closure.end]) {
        const auto& t = a_.body.transitions[ti];
        if (!t.silent || is_pure(t)) continue;
        Branch next = seg;
        if (!constrain(next.sys, next.clocks, t.guard)) continue;
        {
          // Time used so far in this gap may not exceed the gap.
          LinearSystem probe = next.sys;
          close_gap(probe, vars, d, Relation::le);
          if (!probe.feasible()) continue;
        }
        if (impure_used == opt_.silent_cap) {
          cap_hit_ = true;
          continue;
        }
        for (auto c : t.resets) next.clocks[c].clear();
        if (explore_gap(next, t.target, vars, impure_used + 1)) return true;
      }
    }
    return false;
  }

  const StopwatchAutomaton& a_;
  const TimedWord& w_;
  StopwatchOptions opt_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<bool> final_;
  std::vector<std::vector<ClockId>> signatures_;
  std::vector<std::size_t> signature_of_;
  std::vector<std::optional<std::vector<Closure>>> closures_;
  bool cap_hit_ = false;
};

}  // namespace detail

/// Three-valued membership: `inconclusive` when the silent-transition cap cut
/// off part of the search and no accepting run was found within it.
inline Verdict decide_stopwatch(const StopwatchAutomaton& a, const TimedWord& w, StopwatchOptions opt = {}) {
  for (const auto& e : w.events)
    if (!contains(a.body.alphabet, e.letter))
      throw AlphabetError("letter '" + e.letter + "' is not in the alphabet of " + a.body.name);
  check_word(w, a.body.alphabet, DelayPolicy::allow_zero);
  return detail::StopwatchSearch(a, w, opt).run();
}

/// Throws InconclusiveError instead of returning a guess when the cap is hit.
inline bool member_stopwatch(const StopwatchAutomaton& a, const TimedWord& w, StopwatchOptions opt = {}) {
  switch (decide_stopwatch(a, w, opt)) {
    case Verdict::accept: return true;
    case Verdict::reject: return false;
    case Verdict::inconclusive: break;
  }
  throw InconclusiveError("silent-transition cap of " + std::to_string(opt.silent_cap) +
                          " per gap reached before a verdict");
}

}  // namespace tempo
