#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tempo/rational.hpp"

namespace tempo {

using Symbol = std::string;
using Alphabet = std::vector<Symbol>;

inline bool contains(const Alphabet& alphabet, std::string_view letter) {
  return std::find(alphabet.begin(), alphabet.end(), letter) != alphabet.end();
}

/// Sorted, duplicate-free union of two alphabets.
inline Alphabet merge_alphabets(Alphabet a, const Alphabet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

/// Raised for malformed text input; `position` is a character offset into the
/// parsed string (or a 1-based line number for automaton files).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A word or automaton uses a letter outside the declared alphabet.
class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Whether zero delays are admitted. Timed words proper have strictly
/// positive delays; `allow_zero` exists for concatenation edge cases.
enum class DelayPolicy { strict, allow_zero };

struct TimedEvent {
  Rational delay;
  Symbol letter;
  friend bool operator==(const TimedEvent&, const TimedEvent&) = default;
};

/// Finite time-event sequence t1 a1 t2 a2 ... tn an, where ti is the delay
/// elapsed since the previous event (or since time 0).
struct TimedWord {
  std::vector<TimedEvent> events;

  TimedWord() = default;
  explicit TimedWord(std::vector<TimedEvent> evs) : events(std::move(evs)) {}

  [[nodiscard]] std::size_t size() const { return events.size(); }
  [[nodiscard]] bool empty() const { return events.empty(); }
  const TimedEvent& operator[](std::size_t i) const { return events[i]; }

  [[nodiscard]] Rational duration() const {
    Rational total;
    for (const auto& e : events) total += e.delay;
    return total;
  }

  /// Absolute timestamps: prefix[0] = 0, prefix[k] = t1 + ... + tk.
  [[nodiscard]] std::vector<Rational> prefix_sums() const {
    std::vector<Rational> p(events.size() + 1);
    for (std::size_t i = 0; i < events.size(); ++i) p[i + 1] = p[i] + events[i].delay;
    return p;
  }

  [[nodiscard]] std::vector<Symbol> letters() const {
    std::vector<Symbol> out;
    out.reserve(events.size());
    for (const auto& e : events) out.push_back(e.letter);
    return out;
  }

  TimedWord& push(Rational delay, Symbol letter) {
    events.push_back({std::move(delay), std::move(letter)});
    return *this;
  }

  friend TimedWord operator+(TimedWord a, const TimedWord& b) {
    a.events.insert(a.events.end(), b.events.begin(), b.events.end());
    return a;
  }
  friend bool operator==(const TimedWord&, const TimedWord&) = default;
};

/// Ultimately periodic infinite word prefix . period^omega.
struct LassoTimedWord {
  TimedWord prefix;
  TimedWord period;
  friend bool operator==(const LassoTimedWord&, const LassoTimedWord&) = default;
};

/// Checks delays and letters; throws AlphabetError / std::invalid_argument.
inline void check_word(const TimedWord& w, const Alphabet& alphabet,
                       DelayPolicy policy = DelayPolicy::strict) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& e = w[i];
    if (e.delay.sign() < 0 || (policy == DelayPolicy::strict && e.delay.is_zero()))
      throw std::invalid_argument("event " + std::to_string(i + 1) + " has nonpositive delay " +
                                  e.delay.str());
    if (!contains(alphabet, e.letter))
      throw AlphabetError("letter '" + e.letter + "' is not in the alphabet");
  }
}

inline void check_lasso(const LassoTimedWord& w, const Alphabet& alphabet,
                        DelayPolicy policy = DelayPolicy::strict) {
  check_word(w.prefix, alphabet, policy);
  check_word(w.period, alphabet, policy);
  if (w.period.empty()) throw std::invalid_argument("lasso period is empty");
  if (w.period.duration().sign() <= 0)
    throw std::invalid_argument("lasso period has zero duration");
}

namespace detail {

struct Token {
  std::string_view text;
  std::size_t offset;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

}  // namespace detail

/// Parses "DELAY LETTER DELAY LETTER ..." with DELAY a decimal or p/q.
/// An empty alphabet disables the letter check.
inline TimedWord parse_timed_word(std::string_view text, const Alphabet& alphabet = {},
                                  DelayPolicy policy = DelayPolicy::strict) {
  auto tokens = detail::tokenize(text);
  if (tokens.size() % 2 != 0)
    throw ParseError("timed word ends with a dangling delay", tokens.back().offset);
  TimedWord w;
  for (std::size_t i = 0; i < tokens.size(); i += 2) {
    auto delay = Rational::parse(tokens[i].text);
    if (!delay) throw ParseError("expected a delay, got '" + std::string(tokens[i].text) + "'", tokens[i].offset);
    if (delay->sign() < 0 || (policy == DelayPolicy::strict && delay->is_zero()))
      throw ParseError("delay must be positive, got " + delay->str(), tokens[i].offset);
    std::string letter(tokens[i + 1].text);
    if (Rational::parse(letter)) throw ParseError("expected a letter, got '" + letter + "'", tokens[i + 1].offset);
    if (!alphabet.empty() && !contains(alphabet, letter))
      throw ParseError("letter '" + letter + "' is not in the alphabet", tokens[i + 1].offset);
    w.push(*delay, std::move(letter));
  }
  return w;
}

/// Parses "PREFIX | PERIOD".
inline LassoTimedWord parse_lasso(std::string_view text, const Alphabet& alphabet = {},
                                  DelayPolicy policy = DelayPolicy::strict) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("lasso literal needs 'PREFIX | PERIOD'", text.size());
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("lasso literal has more than one '|'", text.find('|', bar + 1));
  LassoTimedWord w;
  w.prefix = parse_timed_word(text.substr(0, bar), alphabet, policy);
  try {
    w.period = parse_timed_word(text.substr(bar + 1), alphabet, policy);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), bar + 1 + e.position());
  }
  if (w.period.empty()) throw ParseError("lasso period is empty", bar + 1);
  if (w.period.duration().sign() <= 0) throw ParseError("lasso period has zero duration", bar + 1);
  return w;
}

inline std::string to_string(const TimedWord& w) {
  std::string out;
  for (const auto& e : w.events) {
    if (!out.empty()) out += ' ';
    out += e.delay.str();
    out += ' ';
    out += e.letter;
  }
  return out;
}

inline std::string to_string(const LassoTimedWord& w) {
  std::string p = to_string(w.prefix);
  return (p.empty() ? std::string() : p + " ") + "| " + to_string(w.period);
}

inline std::ostream& operator<<(std::ostream& os, const TimedWord& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const LassoTimedWord& w) { return os << to_string(w); }

}  // namespace tempo
