#pragma once

// Line-oriented automaton format:
//
//   automaton NAME            (or: buchi NAME, stopwatch NAME)
//   alphabet a b c
//   clocks x y
//   locations q0 q1 q2        (optional; locations are also declared by use)
//   init q0
//   final q2
//   active q0 x               (stopwatch only: clocks advancing in q0)
//   trans q0 a when x<1 & y>=2 reset x -> q1
//
// '#' starts a comment. `when` and `reset` are optional; LETTER `eps` marks a
// silent transition and is only legal in stopwatch automata.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tempo/automaton.hpp"

namespace tempo {

using AnyAutomaton = std::variant<TimedAutomaton, TimedBuchiAutomaton, StopwatchAutomaton>;

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(line)) out.emplace_back(t.text);
  return out;
}

inline ClockConstraint parse_atom(std::string_view text, const std::vector<std::string>& clocks,
                                  std::size_t line) {
  std::size_t op_pos = text.find_first_of("<>=");
  if (op_pos == std::string_view::npos || op_pos == 0)
    throw ParseError("malformed clock constraint '" + std::string(text) + "'", line);
  std::string clock(text.substr(0, op_pos));
  std::string_view rest = text.substr(op_pos);
  Relation rel;
  std::size_t len = 1;
  if (rest.starts_with("<=")) { rel = Relation::le; len = 2; }
  else if (rest.starts_with(">=")) { rel = Relation::ge; len = 2; }
  else if (rest.starts_with("==")) { rel = Relation::eq; len = 2; }
  else if (rest.starts_with("<")) rel = Relation::lt;
  else if (rest.starts_with(">")) rel = Relation::gt;
  else rel = Relation::eq;
  std::string_view num = rest.substr(len);
  if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("clock constraints compare against nonnegative integers, got '" + std::string(num) + "'", line);
  auto it = std::find(clocks.begin(), clocks.end(), clock);
  if (it == clocks.end()) throw ParseError("undeclared clock '" + clock + "'", line);
  return {static_cast<ClockId>(it - clocks.begin()), rel, std::stoll(std::string(num))};
}

inline Guard parse_guard(const std::string& text, const std::vector<std::string>& clocks, std::size_t line) {
  Guard g;
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty() || compact == "true") return g;
  std::size_t start = 0;
  while (start <= compact.size()) {
    auto amp = compact.find('&', start);
    auto piece = compact.substr(start, amp == std::string::npos ? std::string::npos : amp - start);
    if (piece.empty()) throw ParseError("empty clock constraint in guard", line);
    g.atoms.push_back(parse_atom(piece, clocks, line));
    if (amp == std::string::npos) break;
    start = amp + 1;
  }
  return g;
}

inline std::string guard_text(const Guard& g, const std::vector<std::string>& clocks) {
  std::string out;
  for (const auto& a : g.atoms) {
    if (!out.empty()) out += " & ";
    out += clocks[a.clock];
    out += to_string(a.rel);
    out += std::to_string(a.constant);
  }
  return out;
}

}  // namespace detail

/// Parses any of the three automaton kinds. Errors carry 1-based line numbers.
inline AnyAutomaton parse_automaton(std::string_view text) {
  struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
  };
  std::vector<Line> lines;
  {
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++number;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      auto toks = detail::split_ws(raw);
      if (!toks.empty()) lines.push_back({number, std::move(toks)});
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw ParseError("empty automaton description", 1);

  const auto& header = lines.front();
  const std::string& kind = header.tokens[0];
  if (kind != "automaton" && kind != "buchi" && kind != "stopwatch")
    throw ParseError("expected 'automaton', 'buchi' or 'stopwatch' header, got '" + kind + "'", header.number);
  if (header.tokens.size() != 2) throw ParseError("header takes exactly one name", header.number);
  const bool stopwatch = kind == "stopwatch";

  TimedAutomaton a;
  a.name = header.tokens[1];
  std::vector<std::pair<std::string, std::vector<std::string>>> activity;

  // Declarations first so that transitions may appear anywhere.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [n, t] = lines[i];
    if (t[0] == "alphabet") {
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (t[k] == kSilentLetter) throw ParseError("'eps' is reserved for silent transitions", n);
        if (contains(a.alphabet, t[k])) throw ParseError("duplicate letter '" + t[k] + "'", n);
        a.alphabet.push_back(t[k]);
      }
    } else if (t[0] == "clocks") {
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (a.find_clock(t[k])) throw ParseError("duplicate clock '" + t[k] + "'", n);
        a.add_clock(t[k]);
      }
    } else if (t[0] == "locations") {
      for (std::size_t k = 1; k < t.size(); ++k) a.add_location(t[k]);
    }
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [n, t] = lines[i];
    const std::string& kw = t[0];
    if (kw == "alphabet" || kw == "clocks" || kw == "locations") continue;
    if (kw == "init" || kw == "final") {
      auto& target = kw == "init" ? a.initial : a.final;
      for (std::size_t k = 1; k < t.size(); ++k) {
        auto id = a.add_location(t[k]);
        if (std::find(target.begin(), target.end(), id) == target.end()) target.push_back(id);
      }
    } else if (kw == "active") {
      if (!stopwatch) throw ParseError("'active' lines are only allowed in stopwatch automata", n);
      if (t.size() < 2) throw ParseError("'active' needs a location", n);
      a.add_location(t[1]);
      activity.emplace_back(t[1], std::vector<std::string>(t.begin() + 2, t.end()));
    } else if (kw == "trans") {
      // trans SRC LETTER [when G...] [reset C...] -> DST
      auto arrow = std::find(t.begin(), t.end(), "->");
      if (t.size() < 5 || arrow == t.end() || arrow + 2 != t.end() || arrow - t.begin() < 3)
        throw ParseError("expected 'trans SRC LETTER [when G] [reset C...] -> DST'", n);
      Transition tr;
      tr.source = a.add_location(t[1]);
      tr.target = a.add_location(*(arrow + 1));
      if (t[2] == kSilentLetter) {
        if (!stopwatch) throw ParseError("silent transitions are only allowed in stopwatch automata", n);
        tr.silent = true;
      } else {
        if (!contains(a.alphabet, t[2])) throw ParseError("letter '" + t[2] + "' is not in the alphabet", n);
        tr.letter = t[2];
      }
      std::string guard;
      enum { none, in_when, in_reset } mode = none;
      bool seen_when = false, seen_reset = false;
      for (auto it = t.begin() + 3; it != arrow; ++it) {
        if (*it == "when") {
          if (seen_when || seen_reset) throw ParseError("misplaced 'when'", n);
          seen_when = true;
          mode = in_when;
        } else if (*it == "reset") {
          if (seen_reset) throw ParseError("duplicate 'reset'", n);
          seen_reset = true;
          mode = in_reset;
        } else if (mode == in_when) {
          guard += *it;
        } else if (mode == in_reset) {
          auto c = a.find_clock(*it);
          if (!c) throw ParseError("undeclared clock '" + *it + "' in reset", n);
          if (std::find(tr.resets.begin(), tr.resets.end(), *c) == tr.resets.end()) tr.resets.push_back(*c);
        } else {
          throw ParseError("unexpected token '" + *it + "'", n);
        }
      }
      if (seen_when) tr.guard = detail::parse_guard(guard, a.clocks, n);
      a.transitions.push_back(std::move(tr));
    } else {
      throw ParseError("unknown directive '" + kw + "'", n);
    }
  }

  if (kind == "buchi") return reinterpret(a);
  if (kind == "automaton") return a;

  StopwatchAutomaton sw{a, {}};
  // Locations without an `active` line keep every clock running.
  std::vector<ClockId> all(a.clock_count());
  for (ClockId c = 0; c < all.size(); ++c) all[c] = c;
  sw.active.assign(a.locations.size(), all);
  std::vector<bool> declared(a.locations.size(), false);
  for (const auto& [loc, names] : activity) {
    auto l = *a.find_location(loc);
    if (!declared[l]) sw.active[l].clear();
    declared[l] = true;
    for (const auto& nm : names) {
      auto c = a.find_clock(nm);
      if (!c) throw ParseError("undeclared clock '" + nm + "' in active line", 0);
      if (!sw.is_active(l, *c)) sw.active[l].push_back(*c);
    }
  }
  return sw;
}

template <class T>
T parse_automaton_as(std::string_view text) {
  auto any = parse_automaton(text);
  if (auto* p = std::get_if<T>(&any)) return std::move(*p);
  throw ParseError("automaton has the wrong kind for this operation", 1);
}

namespace detail {

template <Acceptance Acc>
void print_body(std::ostream& os, const BasicTimedAutomaton<Acc>& a) {
  os << "alphabet";
  for (const auto& l : a.alphabet) os << ' ' << l;
  os << "\nclocks";
  for (const auto& c : a.clocks) os << ' ' << c;
  os << "\nlocations";
  for (const auto& l : a.locations) os << ' ' << l;
  os << "\ninit";
  for (auto l : a.initial) os << ' ' << a.locations[l];
  os << "\nfinal";
  for (auto l : a.final) os << ' ' << a.locations[l];
  os << '\n';
}

template <Acceptance Acc>
void print_transitions(std::ostream& os, const BasicTimedAutomaton<Acc>& a) {
  for (const auto& t : a.transitions) {
    os << "trans " << a.locations[t.source] << ' ' << (t.silent ? std::string(kSilentLetter) : t.letter);
    if (!t.guard.is_true()) os << " when " << guard_text(t.guard, a.clocks);
    if (!t.resets.empty()) {
      os << " reset";
      for (auto c : t.resets) os << ' ' << a.clocks[c];
    }
    os << " -> " << a.locations[t.target] << '\n';
  }
}

}  // namespace detail

inline std::string to_text(const TimedAutomaton& a) {
  std::ostringstream os;
  os << "automaton " << a.name << '\n';
  detail::print_body(os, a);
  detail::print_transitions(os, a);
  return os.str();
}

inline std::string to_text(const TimedBuchiAutomaton& a) {
  std::ostringstream os;
  os << "buchi " << a.name << '\n';
  detail::print_body(os, a);
  detail::print_transitions(os, a);
  return os.str();
}

inline std::string to_text(const StopwatchAutomaton& a) {
  std::ostringstream os;
  os << "stopwatch " << a.body.name << '\n';
  detail::print_body(os, a.body);
  for (std::size_t l = 0; l < a.active.size(); ++l) {
    os << "active " << a.body.locations[l];
    for (auto c : a.active[l]) os << ' ' << a.body.clocks[c];
    os << '\n';
  }
  detail::print_transitions(os, a.body);
  return os.str();
}

inline std::string to_text(const AnyAutomaton& a) {
  return std::visit([](const auto& x) { return to_text(x); }, a);
}

}  // namespace tempo
