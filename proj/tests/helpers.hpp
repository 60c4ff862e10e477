#pragma once

#include "catch_amalgamated.hpp"
#include "tempo/tempo.hpp"

namespace tempo_test {

inline tempo::TimedWord W(std::string_view text) { return tempo::parse_timed_word(text); }
inline tempo::LassoTimedWord L(std::string_view text) { return tempo::parse_lasso(text); }
inline tempo::Rational Q(long n, long d = 1) { return {n, d}; }

/// One location, initial and final, TRUE self-loop on every letter.
template <tempo::Acceptance Acc = tempo::Acceptance::finite>
tempo::BasicTimedAutomaton<Acc> loop_all(const tempo::Alphabet& sigma) {
  return tempo::universal<Acc>(sigma);
}

}  // namespace tempo_test
