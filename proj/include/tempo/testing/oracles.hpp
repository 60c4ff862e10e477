#pragma once

// Reference predicates for tests and suites. Each is computed directly from
// the language definition, without automata.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "tempo/linear.hpp"
#include "tempo/timed_word.hpp"

namespace tempo::oracle {

inline bool only_letter(const TimedWord& w, const Symbol& a) {
  for (const auto& e : w.events)
    if (e.letter != a) return false;
  return true;
}

/// Number of index pairs i < j (1-based) with t_{i+1} + ... + t_j = 1.
inline std::size_t unit_pairs(const TimedWord& w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational sum;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      sum += w[j].delay;
      if (sum == Rational(1)) ++count;
    }
  }
  return count;
}

inline bool in_A(const TimedWord& w, const Symbol& a = "a") { return only_letter(w, a) && unit_pairs(w) >= 1; }

inline bool in_An(const TimedWord& w, std::size_t n, const Symbol& a = "a") {
  return only_letter(w, a) && unit_pairs(w) >= n;
}

inline std::size_t occurrences(const TimedWord& w, const Symbol& c) {
  std::size_t n = 0;
  for (const auto& e : w.events) n += e.letter == c ? 1 : 0;
  return n;
}

inline bool in_L2(const TimedWord& w, const Symbol& c) { return occurrences(w, c) != 1; }

inline bool shape(const TimedWord& w, std::initializer_list<const char*> letters) {
  if (w.size() != letters.size()) return false;
  std::size_t i = 0;
  for (const char* l : letters)
    if (w[i++].letter != l) return false;
  for (const auto& e : w.events)
    if (e.delay.sign() <= 0) return false;
  return true;
}

/// t1 a 1 a t2 a, t1 + t2 = 1.
inline bool in_R1(const TimedWord& w) {
  return shape(w, {"a", "a", "a"}) && w[1].delay == Rational(1) && w[0].delay + w[2].delay == Rational(1);
}

/// 1 b s b.
inline bool in_R2(const TimedWord& w) { return shape(w, {"b", "b"}) && w[0].delay == Rational(1); }

/// t1 a 1 b s b 1 a t2 a.
inline bool in_R3(const TimedWord& w) {
  return shape(w, {"a", "b", "b", "a", "a"}) && w[1].delay == Rational(1) && w[3].delay == Rational(1);
}

/// The characterization of (R1 shuffle R2) restricted to R3.
inline bool in_R1R2_R3(const TimedWord& w) { return in_R3(w) && w[0].delay + w[4].delay == Rational(1); }

/// Shuffle by brute force: every order-preserving assignment of w's events
/// to x and y, each checked as a linear program over the gap splits.
inline bool shuffle(const TimedWord& w, const TimedWord& x, const TimedWord& y) {
  const std::size_t n = w.size();
  if (n != x.size() + y.size()) return false;
  std::vector<bool> left(n, false);
  // Enumerate subsets of positions of size |x| in lexicographic order.
  std::vector<std::size_t> pick(x.size());
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
  for (;;) {
    std::fill(left.begin(), left.end(), false);
    for (auto p : pick) left[p] = true;
    bool letters = true;
    for (std::size_t i = 0, j = 0, k = 0; i < n && letters; ++i)
      letters = left[i] ? w[i].letter == x[j++].letter : w[i].letter == y[k++].letter;
    if (letters) {
      // dx_i for each gap; dy_i = t_i - dx_i.
      LinearSystem sys(n);
      for (std::size_t i = 0; i < n; ++i) sys.add({{i, Rational(1)}}, Relation::le, w[i].delay);
      LinearSystem::Terms tx, ty;
      Rational ty_const;
      std::size_t j = 0, k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        tx.emplace_back(i, Rational(1));
        ty.emplace_back(i, Rational(-1));
        ty_const += w[i].delay;
        if (left[i]) {
          sys.add(tx, Relation::eq, x[j++].delay);
          tx.clear();
        } else {
          // sum (t_i - dx_i) = y delay  <=>  -sum dx_i = y delay - sum t_i
          sys.add(ty, Relation::eq, y[k++].delay - ty_const);
          ty.clear();
          ty_const = Rational();
        }
      }
      // No time for a word after its last event.
      if (!tx.empty()) sys.add(tx, Relation::eq, Rational());
      if (!ty.empty()) sys.add(ty, Relation::eq, -ty_const);
      if (sys.feasible()) return true;
    }
    // Next combination.
    std::size_t m = pick.size();
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == n - m + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t t = i; t < m; ++t) pick[t] = pick[t - 1] + 1;
  }
}

/// Number of clock regions, by enumerating valuations whose fractional parts
/// are multiples of 1/(n+1) and classifying each directly.
inline std::size_t region_count(std::size_t n, std::int64_t k) {
  using Key = std::tuple<std::vector<std::int64_t>, std::vector<bool>, std::vector<int>>;
  std::set<Key> seen;
  const auto steps = static_cast<std::size_t>((k + 1) * static_cast<std::int64_t>(n + 1));
  std::vector<std::size_t> digits(n, 0);
  const Rational unit(1, static_cast<long>(n + 1));
  const Rational bound(static_cast<long>(k));
  for (;;) {
    std::vector<Rational> v;
    for (auto d : digits) v.push_back(Rational(static_cast<long>(d)) * unit);
    std::vector<std::int64_t> ints;
    std::vector<bool> integral;
    std::vector<int> order;
    for (const auto& x : v) {
      const bool over = x > bound;
      ints.push_back(over ? k + 1 : x.floor().get_si());
      integral.push_back(over || x.is_integer());
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (v[a] > bound || v[b] > bound) {
          order.push_back(0);
          continue;
        }
        const auto fa = v[a].fractional(), fb = v[b].fractional();
        order.push_back(fa < fb ? -1 : (fa == fb ? 0 : 1));
      }
    seen.emplace(ints, integral, order);
    std::size_t i = 0;
    while (i < n && ++digits[i] > steps) digits[i++] = 0;
    if (i == n) break;
  }
  return seen.size();
}

}  // namespace tempo::oracle
