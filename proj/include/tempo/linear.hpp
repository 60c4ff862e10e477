#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tempo/guard.hpp"
#include "tempo/rational.hpp"

namespace tempo {

/// Exact feasibility of a system of linear constraints over nonnegative
/// rational variables; strict inequalities are supported. Solved with a
/// two-phase tableau simplex under Bland's rule, then (if any constraint is
/// strict) by maximizing a slack epsilon <= 1 shared by all strict rows.
class LinearSystem {
 public:
  using Terms = std::vector<std::pair<std::size_t, Rational>>;

  explicit LinearSystem(std::size_t variables = 0) : variables_(variables) {}

  std::size_t add_variable() { return variables_++; }
  [[nodiscard]] std::size_t variable_count() const { return variables_; }
  [[nodiscard]] std::size_t constraint_count() const { return rows_.size(); }

  void add(Terms terms, Relation rel, Rational rhs) {
    for (const auto& [v, _] : terms)
      if (v >= variables_) variables_ = v + 1;
    rows_.push_back({std::move(terms), rel, std::move(rhs)});
  }

  [[nodiscard]] bool feasible() const { return solve().has_value(); }

  /// A feasible point, or nullopt.
  [[nodiscard]] std::optional<std::vector<Rational>> solve() const;

 private:
  struct Row {
    Terms terms;
    Relation rel;
    Rational rhs;
  };
  std::size_t variables_;
  std::vector<Row> rows_;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), t_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  std::vector<Rational>& row(std::size_t i) { return t_[i]; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }
  [[nodiscard]] std::size_t rows() const { return t_.size(); }

  /// Maximizes cost . x over the current basis; `allowed[j]` gates entering
  /// columns. Returns false if unbounded.
  bool maximize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
        if (!allowed[j]) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < rows(); ++i)
          if (!t_[i][j].is_zero() && !cost[basis_[i]].is_zero()) r -= cost[basis_[i]] * t_[i][j];
        if (r.sign() > 0) enter = j;
      }
      if (enter == cols_) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& x : t_[r])
      if (!x.is_zero()) x /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || t_[i][c].is_zero()) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  [[nodiscard]] Rational value(std::size_t col) const {
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] == col) return t_[i][cols_];
    return Rational();
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

inline std::optional<std::vector<Rational>> LinearSystem::solve() const {
  enum class Kind { le, ge, eq };
  struct Std {
    std::vector<Rational> coef;
    Kind kind;
    Rational rhs;
  };
  bool strict = false;
  for (const auto& r : rows_) strict = strict || r.rel == Relation::lt || r.rel == Relation::gt;
  const std::size_t n = variables_;
  const std::size_t eps = n;
  const std::size_t structural = n + (strict ? 1 : 0);

  std::vector<Std> std_rows;
  for (const auto& r : rows_) {
    Std s{std::vector<Rational>(structural), Kind::eq, r.rhs};
    for (const auto& [v, c] : r.terms) s.coef[v] += c;
    switch (r.rel) {
      case Relation::lt: s.kind = Kind::le; s.coef[eps] = 1; break;
      case Relation::le: s.kind = Kind::le; break;
      case Relation::eq: s.kind = Kind::eq; break;
      case Relation::ge: s.kind = Kind::ge; break;
      case Relation::gt: s.kind = Kind::ge; s.coef[eps] = -1; break;
    }
    if (s.rhs.sign() < 0) {
      for (auto& c : s.coef) c = -c;
      s.rhs = -s.rhs;
      if (s.kind == Kind::le) s.kind = Kind::ge;
      else if (s.kind == Kind::ge) s.kind = Kind::le;
    }
    std_rows.push_back(std::move(s));
  }
  if (strict) {
    Std cap{std::vector<Rational>(structural), Kind::le, Rational(1)};
    cap.coef[eps] = 1;
    std_rows.push_back(std::move(cap));
  }

  std::size_t slack_count = 0, art_count = 0;
  for (const auto& s : std_rows) {
    if (s.kind != Kind::eq) ++slack_count;
    if (s.kind != Kind::le) ++art_count;
  }
  const std::size_t cols = structural + slack_count + art_count;
  const std::size_t first_art = structural + slack_count;
  detail::Tableau tab(std_rows.size(), cols);
  std::size_t next_slack = structural, next_art = first_art;
  for (std::size_t i = 0; i < std_rows.size(); ++i) {
    auto& row = tab.row(i);
    const auto& s = std_rows[i];
    for (std::size_t j = 0; j < structural; ++j) row[j] = s.coef[j];
    row[cols] = s.rhs;
    if (s.kind == Kind::le) {
      row[next_slack] = 1;
      tab.basis(i) = next_slack++;
    } else {
      if (s.kind == Kind::ge) row[next_slack++] = -1;
      row[next_art] = 1;
      tab.basis(i) = next_art++;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (art_count > 0) {
    std::vector<Rational> cost(cols);
    for (std::size_t j = first_art; j < cols; ++j) cost[j] = -1;
    tab.maximize(cost, allowed);
    for (std::size_t j = first_art; j < cols; ++j)
      if (tab.value(j).sign() != 0) return std::nullopt;
    // Pivot zero-valued artificials out of the basis where possible.
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      if (tab.basis(i) < first_art) continue;
      for (std::size_t j = 0; j < first_art; ++j)
        if (!tab.row(i)[j].is_zero()) {
          tab.pivot(i, j);
          break;
        }
    }
    for (std::size_t j = first_art; j < cols; ++j) allowed[j] = false;
  }
  if (strict) {
    std::vector<Rational> cost(cols);
    cost[eps] = 1;
    bool bounded = tab.maximize(cost, allowed);
    if (bounded && tab.value(eps).sign() <= 0) return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = tab.value(j);
  return x;
}

}  // namespace tempo
