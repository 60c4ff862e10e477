#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tempo/timed_word.hpp"

namespace tempo {

/// Delays k/d with 1 <= d <= max_den and 1 <= k <= max_ratio * d.
struct DelaySpec {
  std::int64_t max_den = 8;
  std::int64_t max_ratio = 2;
};

/// Seeded generator. Draws use plain modulo reduction of mt19937_64 output,
/// which is fully specified, so samples are identical across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 0) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return below(2) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  Rational delay(DelaySpec spec = {}) {
    const auto d = between(1, spec.max_den);
    const auto k = between(1, spec.max_ratio * d);
    return {static_cast<long>(k), static_cast<long>(d)};
  }

  TimedWord word(const Alphabet& sigma, std::size_t length, DelaySpec spec = {}) {
    TimedWord w;
    for (std::size_t i = 0; i < length; ++i) {
      auto d = delay(spec);
      w.push(d, pick(sigma));
    }
    return w;
  }

  /// Delays drawn from a fixed list.
  TimedWord word_from(const Alphabet& sigma, const std::vector<Rational>& delays, std::size_t length) {
    TimedWord w;
    for (std::size_t i = 0; i < length; ++i) {
      const auto& d = pick(delays);
      w.push(d, pick(sigma));
    }
    return w;
  }

  /// Length uniform in [0, max_length].
  TimedWord word_upto(const Alphabet& sigma, std::size_t max_length, DelaySpec spec = {}) {
    return word(sigma, below(max_length + 1), spec);
  }

  LassoTimedWord lasso(const Alphabet& sigma, std::size_t max_prefix, std::size_t max_period, DelaySpec spec = {}) {
    LassoTimedWord l;
    l.prefix = word_upto(sigma, max_prefix, spec);
    l.period = word(sigma, 1 + below(max_period), spec);
    return l;
  }

  /// Random member of the shuffle of x and y: each word is cut into factors
  /// (cuts may fall inside a delay, splitting it), and the factors are
  /// interleaved.
  std::vector<TimedWord> shuffle(const TimedWord& x, const TimedWord& y, std::size_t count) {
    std::vector<TimedWord> out;
    for (std::size_t n = 0; n < count; ++n) out.push_back(one_shuffle(x, y));
    return out;
  }

 private:
  using Factor = std::vector<std::pair<Rational, const Symbol*>>;  // (delay, letter or null)

  std::vector<Factor> cut(const TimedWord& w) {
    std::vector<Factor> factors(1);
    for (const auto& e : w.events) {
      if (coin()) {
        // Split the delay and cut inside it.
        const auto den = between(2, 5);
        const auto num = between(1, den - 1);
        const Rational first = e.delay * Rational(static_cast<long>(num), static_cast<long>(den));
        factors.back().emplace_back(first, nullptr);
        factors.emplace_back();
        factors.back().emplace_back(e.delay - first, &e.letter);
      } else {
        factors.back().emplace_back(e.delay, &e.letter);
      }
      if (coin()) factors.emplace_back();
    }
    return factors;
  }

  TimedWord one_shuffle(const TimedWord& x, const TimedWord& y) {
    auto fx = cut(x), fy = cut(y);
    if (coin()) fx.insert(fx.begin(), Factor{});
    const std::size_t n = std::max(fx.size(), fy.size());
    fx.resize(n);
    fy.resize(n);
    TimedWord w;
    Rational pending;
    auto emit = [&](const Factor& f) {
      for (const auto& [d, letter] : f) {
        pending += d;
        if (letter) {
          w.push(pending, *letter);
          pending = Rational();
        }
      }
    };
    for (std::size_t i = 0; i < n; ++i) {
      emit(fx[i]);
      emit(fy[i]);
    }
    return w;
  }

  std::mt19937_64 rng_;
};

inline std::vector<TimedWord> sample_shuffle(const TimedWord& x, const TimedWord& y, std::size_t count,
                                             Sampler& sampler) {
  return sampler.shuffle(x, y, count);
}

}  // namespace tempo
