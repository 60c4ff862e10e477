#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tempo/membership.hpp"

namespace tempo {

/// Finite word grid: lengths 0..max_length, delays k/d with
/// 1 <= k <= max_numerator and d among `denominators`.
struct GridSpec {
  std::size_t max_length = 4;
  std::vector<std::int64_t> denominators{1, 2, 4};
  std::int64_t max_numerator = 4;

  [[nodiscard]] std::vector<Rational> delays() const {
    std::vector<Rational> out;
    for (auto d : denominators) {
      if (d <= 0) throw std::invalid_argument("grid denominators must be positive");
      for (std::int64_t k = 1; k <= max_numerator; ++k) out.emplace_back(static_cast<long>(k), static_cast<long>(d));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

/// Calls `visit` on grid words in order of length; stops when it returns false.
inline void for_each_grid_word(const Alphabet& sigma, const GridSpec& grid,
                               const std::function<bool(const TimedWord&)>& visit) {
  const auto delays = grid.delays();
  const std::size_t choices = delays.size() * sigma.size();
  for (std::size_t len = 0; len <= grid.max_length; ++len) {
    if (len > 0 && choices == 0) return;
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      TimedWord w;
      for (auto dgt : digits) w.push(delays[dgt / sigma.size()], sigma[dgt % sigma.size()]);
      if (!visit(w)) return;
      std::size_t i = 0;
      while (i < len && ++digits[i] == choices) digits[i++] = 0;
      if (i == len) break;
    }
  }
}

struct UniversalityVerdict {
  std::optional<TimedWord> counterexample;
  std::size_t words_checked = 0;
};

/// Searches the grid for a rejected word. A returned counterexample has been
/// re-checked with `member`; an empty result only means none exists in the
/// grid.
inline UniversalityVerdict bounded_universality(const TimedAutomaton& a, const GridSpec& grid) {
  require_valid(a);
  UniversalityVerdict v;
  for_each_grid_word(a.alphabet, grid, [&](const TimedWord& w) {
    ++v.words_checked;
    if (member(a, w)) return true;
    v.counterexample = w;
    return false;
  });
  if (v.counterexample && member(a, *v.counterexample))
    throw std::logic_error("counterexample failed re-verification");
  return v;
}

}  // namespace tempo
