#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tempo/rational.hpp"

namespace tempo {

using ClockId = std::size_t;

enum class Relation { lt, le, eq, ge, gt };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::lt: return "<";
    case Relation::le: return "<=";
    case Relation::eq: return "=";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
  }
  return "?";
}

inline bool compare(const Rational& lhs, Relation r, const Rational& rhs) {
  switch (r) {
    case Relation::lt: return lhs < rhs;
    case Relation::le: return lhs <= rhs;
    case Relation::eq: return lhs == rhs;
    case Relation::ge: return lhs >= rhs;
    case Relation::gt: return lhs > rhs;
  }
  return false;
}

/// clock ◁ constant, constant a nonnegative integer.
struct ClockConstraint {
  ClockId clock = 0;
  Relation rel = Relation::eq;
  std::int64_t constant = 0;
  friend bool operator==(const ClockConstraint&, const ClockConstraint&) = default;
  friend auto operator<=>(const ClockConstraint&, const ClockConstraint&) = default;
};

/// Interval of [0, inf) with integer endpoints; `upper == nullopt` is +inf.
struct ClockInterval {
  std::int64_t lower = 0;
  bool lower_open = false;
  std::optional<std::int64_t> upper;
  bool upper_open = true;

  static ClockInterval everything() { return {}; }
  static ClockInterval point(std::int64_t c) { return {c, false, c, false}; }

  [[nodiscard]] bool empty() const {
    if (!upper) return false;
    if (*upper < lower) return true;
    return *upper == lower && (lower_open || upper_open);
  }

  [[nodiscard]] bool contains(const Rational& v) const {
    Rational lo(static_cast<long>(lower));
    if (lower_open ? !(v > lo) : !(v >= lo)) return false;
    if (!upper) return true;
    Rational hi(static_cast<long>(*upper));
    return upper_open ? v < hi : v <= hi;
  }

  [[nodiscard]] ClockInterval intersect(const ClockInterval& o) const {
    ClockInterval r = *this;
    if (o.lower > r.lower || (o.lower == r.lower && o.lower_open)) {
      r.lower = o.lower;
      r.lower_open = o.lower_open || (o.lower == lower && lower_open);
    }
    if (o.upper) {
      if (!r.upper || *o.upper < *r.upper) {
        r.upper = o.upper;
        r.upper_open = o.upper_open;
      } else if (*o.upper == *r.upper) {
        r.upper_open = r.upper_open || o.upper_open;
      }
    }
    return r;
  }

  friend bool operator==(const ClockInterval& a, const ClockInterval& b) {
    if (a.empty() && b.empty()) return true;
    return a.lower == b.lower && a.lower_open == b.lower_open && a.upper == b.upper &&
           (!a.upper || a.upper_open == b.upper_open);
  }
};

inline ClockInterval interval_of(const ClockConstraint& a) {
  ClockInterval i;
  switch (a.rel) {
    case Relation::lt: i.upper = a.constant; i.upper_open = true; break;
    case Relation::le: i.upper = a.constant; i.upper_open = false; break;
    case Relation::eq: return ClockInterval::point(a.constant);
    case Relation::ge: i.lower = a.constant; i.lower_open = false; break;
    case Relation::gt: i.lower = a.constant; i.lower_open = true; break;
  }
  return i;
}

/// Conjunction of diagonal-free atoms; no atoms means TRUE.
struct Guard {
  std::vector<ClockConstraint> atoms;

  Guard() = default;
  Guard(std::initializer_list<ClockConstraint> a) : atoms(a) {}
  explicit Guard(std::vector<ClockConstraint> a) : atoms(std::move(a)) {}

  [[nodiscard]] bool is_true() const { return atoms.empty(); }

  [[nodiscard]] bool holds(std::span<const Rational> valuation) const {
    for (const auto& a : atoms)
      if (!compare(valuation[a.clock], a.rel, Rational(static_cast<long>(a.constant)))) return false;
    return true;
  }

  /// The set of values each clock may take, clock by clock.
  [[nodiscard]] std::vector<ClockInterval> per_clock(std::size_t clock_count) const {
    std::vector<ClockInterval> out(clock_count);
    for (const auto& a : atoms) {
      if (a.clock >= clock_count) throw std::out_of_range("guard mentions clock outside the clock set");
      out[a.clock] = out[a.clock].intersect(interval_of(a));
    }
    return out;
  }

  /// Diagonal-free conjunctions are satisfiable iff every clock's interval is.
  [[nodiscard]] bool satisfiable(std::size_t clock_count) const {
    auto iv = per_clock(clock_count);
    return std::none_of(iv.begin(), iv.end(), [](const ClockInterval& i) { return i.empty(); });
  }

  [[nodiscard]] std::int64_t max_constant() const {
    std::int64_t k = 0;
    for (const auto& a : atoms) k = std::max(k, a.constant);
    return k;
  }

  friend Guard operator&&(Guard a, const Guard& b) {
    a.atoms.insert(a.atoms.end(), b.atoms.begin(), b.atoms.end());
    return a;
  }
  friend bool operator==(const Guard&, const Guard&) = default;
};

/// Atoms describing `clock ∈ interval` (empty for the whole half-line).
inline std::vector<ClockConstraint> atoms_for(ClockId clock, const ClockInterval& iv) {
  if (iv.upper && *iv.upper == iv.lower && !iv.lower_open && !iv.upper_open)
    return {{clock, Relation::eq, iv.lower}};
  std::vector<ClockConstraint> out;
  if (iv.lower > 0 || iv.lower_open)
    out.push_back({clock, iv.lower_open ? Relation::gt : Relation::ge, iv.lower});
  if (iv.upper) out.push_back({clock, iv.upper_open ? Relation::lt : Relation::le, *iv.upper});
  return out;
}

/// Conjunction of two guards is satisfiable.
inline bool overlap(const Guard& a, const Guard& b, std::size_t clock_count) {
  return (a && b).satisfiable(clock_count);
}

}  // namespace tempo
