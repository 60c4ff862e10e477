#pragma once

// Seeded property suites. Each check counts trials and failures; a check
// passes when it ran at least once and nothing failed.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tempo/constructions.hpp"
#include "tempo/determinism.hpp"
#include "tempo/membership.hpp"
#include "tempo/regions.hpp"
#include "tempo/sampling.hpp"
#include "tempo/shuffle.hpp"
#include "tempo/stopwatch.hpp"
#include "tempo/testing/oracles.hpp"
#include "tempo/universality.hpp"

namespace tempo::testing {

struct Check {
  std::string name;
  int criterion = 0;  // acceptance criterion carried by this check, 0 if none
  std::size_t total = 0;
  std::size_t failures = 0;
  std::string note;
  std::string first_failure;

  [[nodiscard]] bool passed() const { return total > 0 && failures == 0; }

  void expect(bool ok, const std::string& what = {}) {
    ++total;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::deque<Check> checks;  // add() hands out references that must stay valid

  [[nodiscard]] bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return !checks.empty();
  }

  Check& add(std::string name, int criterion = 0) {
    checks.push_back({std::move(name), criterion, 0, 0, {}, {}});
    return checks.back();
  }
};

namespace detail {

inline const Alphabet& ab() {
  static const Alphabet s{"a", "b"};
  return s;
}
inline const Alphabet& abc() {
  static const Alphabet s{"a", "b", "c"};
  return s;
}

inline TimedWord word(std::initializer_list<std::pair<Rational, const char*>> events) {
  TimedWord w;
  for (const auto& [d, l] : events) w.push(d, l);
  return w;
}

inline std::string show(const TimedWord& w) { return "\"" + to_string(w) + "\""; }
inline std::string show(const LassoTimedWord& w) { return "\"" + to_string(w.prefix) + " | " + to_string(w.period) + "\""; }

/// A proper fraction k/d with d <= 8.
inline Rational unit_fraction(Sampler& s) {
  const auto d = s.between(2, 8);
  return {static_cast<long>(s.between(1, d - 1)), static_cast<long>(d)};
}

inline TimedWord r1_word(const Rational& t1, const Rational& t2) {
  return word({{t1, "a"}, {Rational(1), "a"}, {t2, "a"}});
}
inline TimedWord r2_word(const Rational& s) { return word({{Rational(1), "b"}, {s, "b"}}); }
inline TimedWord r3_word(const Rational& t1, const Rational& s, const Rational& t2) {
  return word({{t1, "a"}, {Rational(1), "b"}, {s, "b"}, {Rational(1), "a"}, {t2, "a"}});
}

/// t2 != 1 - t1, positive.
inline Rational off_by(Sampler& s, const Rational& t1) {
  for (;;) {
    auto t2 = s.delay({8, 1});
    if (t1 + t2 != Rational(1)) return t2;
  }
}

inline std::vector<Rational> grid_delays() { return GridSpec{}.delays(); }

}  // namespace detail

/// gadget_A and gadget_An against the pair-counting predicate.
inline SuiteReport suite_gadgets(std::uint64_t seed) {
  SuiteReport r{"gadgets", seed, {}};
  Sampler s(seed);
  const Alphabet a_only{"a"};
  const auto A = gadget_A(a_only);
  const auto A1 = gadget_An(a_only, "a", 1);
  const auto A2 = gadget_An(a_only, "a", 2);
  const auto A3 = gadget_An(a_only, "a", 3);

  std::vector<TimedWord> words;
  for (int i = 0; i < 500; ++i) words.push_back(s.word_upto(a_only, 8, {8, 1}));
  std::size_t in_a = 0, in_a2 = 0;
  for (const auto& w : words) {
    in_a += oracle::in_A(w) ? 1 : 0;
    in_a2 += oracle::in_An(w, 2) ? 1 : 0;
  }

  auto& c1 = r.add("gadget_A equals the unit-pair predicate", 1);
  for (const auto& w : words) c1.expect(member(A, w) == oracle::in_A(w), detail::show(w));
  c1.note = std::to_string(in_a) + " of " + std::to_string(words.size()) + " words in A";

  auto& c2 = r.add("gadget_An(2) equals the two-distinct-pairs predicate", 1);
  for (const auto& w : words) c2.expect(member(A2, w) == oracle::in_An(w, 2), detail::show(w));
  c2.note = std::to_string(in_a2) + " of " + std::to_string(words.size()) + " words in A2";

  auto& c3 = r.add("gadget_An(1) agrees with gadget_A");
  for (int i = 0; i < 200; ++i) c3.expect(member(A1, words[i]) == member(A, words[i]), detail::show(words[i]));

  auto& c4 = r.add("gadget_An(3) equals the three-distinct-pairs predicate");
  for (int i = 0; i < 200; ++i) c4.expect(member(A3, words[i]) == oracle::in_An(words[i], 3), detail::show(words[i]));

  auto& c5 = r.add("gadget_An(n) has n clocks and constant 1");
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = gadget_An(a_only, "a", n);
    c5.expect(g.clock_count() == n && g.max_constant() == 1 && validate(g).empty(), "n = " + std::to_string(n));
  }

  auto& c6 = r.add("words with another letter are outside A");
  const auto Aab = gadget_A(detail::ab());
  for (int i = 0; i < 200; ++i) {
    auto w = s.word_upto(detail::ab(), 6, {4, 1});
    c6.expect(member(Aab, w) == oracle::in_A(w), detail::show(w));
  }
  return r;
}

/// build_thm1: universal and empty L.
inline SuiteReport suite_thm1(std::uint64_t seed) {
  SuiteReport r{"thm1", seed, {}};
  Sampler s(seed);
  const Symbol c = "c";
  const auto sigma = detail::ab();
  const auto grid = detail::grid_delays();
  const auto full = build_thm1(universal(sigma), c);
  const auto cut = build_thm1(empty_language(sigma), c);
  const auto everything = universal(detail::abc());

  auto& u1 = r.add("universal L: grid words accepted", 2);
  auto& u2 = r.add("universal L: agrees with the 0-clock universal automaton", 2);
  for (int i = 0; i < 300; ++i) {
    auto w = s.word_from(detail::abc(), grid, s.below(5));
    const bool in = member(full.built, w);
    u1.expect(in, detail::show(w));
    u2.expect(in == member(everything, w), detail::show(w));
  }
  auto& u3 = r.add("universal L: one clock, used only by the A branch", 2);
  u3.expect(full.clocks == 1 && full.components[0].clock_count() == 0 && full.components[1].clock_count() == 0 &&
            full.components[2].clock_count() == 1);

  auto& e1 = r.add("empty L: u 1 c x accepted iff x in A", 2);
  auto& e2 = r.add("empty L: u 1 c x agrees with gadget_A on x", 2);
  const auto A = gadget_A(sigma);
  std::size_t positives = 0;
  for (int i = 0; i < 200; ++i) {
    auto u = s.word_upto(sigma, 4, {4, 2});
    auto x = s.below(5) == 0 ? s.word_upto(sigma, 5, {4, 1}) : s.word_upto({"a"}, 5, {4, 1});
    auto w = u + detail::word({{Rational(1), "c"}}) + x;
    const bool in = member(cut.built, w);
    positives += in ? 1 : 0;
    e1.expect(in == oracle::in_A(x), detail::show(w));
    e2.expect(in == member(A, x), detail::show(w));
  }
  e1.note = std::to_string(positives) + " of 200 accepted";

  auto& e3 = r.add("any L: words without c accepted");
  for (int i = 0; i < 100; ++i) {
    auto w = s.word_upto(sigma, 6);
    e3.expect(member(cut.built, w), detail::show(w));
  }

  auto& g1 = r.add("bounded universality: no counterexample for universal L");
  auto v = bounded_universality(full.built, GridSpec{3, {1, 2, 4}, 4});
  g1.expect(!v.counterexample, v.counterexample ? detail::show(*v.counterexample) : "");
  g1.note = std::to_string(v.words_checked) + " grid words";

  auto& g2 = r.add("bounded universality: empty L yields u t c x with x outside A");
  auto ce = bounded_universality(cut.built, GridSpec{3, {1, 2, 4}, 4}).counterexample;
  bool shaped = false;
  if (ce && oracle::occurrences(*ce, c) == 1) {
    TimedWord x;
    bool after = false;
    for (const auto& e : ce->events) {
      if (after) x.events.push_back(e);
      after = after || e.letter == c;
    }
    shaped = !oracle::in_A(x) && !member(cut.built, *ce);
  }
  g2.expect(shaped, ce ? detail::show(*ce) : "no counterexample");
  return r;
}

/// build_thm2: clock bound and the universal case.
inline SuiteReport suite_thm2(std::uint64_t seed) {
  SuiteReport r{"thm2", seed, {}};
  Sampler s(seed);
  const Symbol c = "c";
  const auto sigma = detail::ab();
  const std::vector<TimedAutomaton> ls{universal(sigma), empty_language(sigma), gadget_A(sigma), gadget_R1(),
                                       gadget_An(sigma, "a", 3)};

  auto& k1 = r.add("clocks <= max(clocks(L), n)", 3);
  auto& k2 = r.add("clocks(L) > n is rejected", 3);
  for (std::size_t n : {2U, 3U}) {
    for (const auto& l : ls) {
      const std::string what = l.name + ", n = " + std::to_string(n);
      if (l.clock_count() > n) {
        bool threw = false;
        try {
          (void)build_thm2(l, n, c);
        } catch (const std::invalid_argument&) {
          threw = true;
        }
        k2.expect(threw, what);
        continue;
      }
      const auto rep = build_thm2(l, n, c);
      k1.expect(rep.clocks <= std::max(l.clock_count(), n) && rep.built.clock_count() == rep.clocks, what);
    }
  }

  const auto grid = detail::grid_delays();
  for (std::size_t n : {2U, 3U}) {
    auto& u = r.add("universal L, n = " + std::to_string(n) + ": grid words accepted", 3);
    const auto rep = build_thm2(universal(sigma), n, c);
    for (int i = 0; i < 300; ++i) {
      auto w = s.word_from(detail::abc(), grid, s.below(5));
      u.expect(member(rep.built, w), detail::show(w));
    }
  }

  auto& e = r.add("empty L, n = 2: u 1 c x accepted iff x in A2");
  const auto rep = build_thm2(empty_language(sigma), 2, c);
  std::size_t positives = 0;
  for (int i = 0; i < 200; ++i) {
    auto u = s.word_upto(sigma, 3, {4, 2});
    auto x = s.word_upto({"a"}, 6, {4, 1});
    auto w = u + detail::word({{Rational(1), "c"}}) + x;
    const bool in = member(rep.built, w);
    positives += in ? 1 : 0;
    e.expect(in == oracle::in_An(x, 2), detail::show(w));
  }
  e.note = std::to_string(positives) + " of 200 accepted";
  return r;
}

/// build_thm4, including the shuffle with R2.
inline SuiteReport suite_thm4(std::uint64_t seed) {
  SuiteReport r{"thm4", seed, {}};
  Sampler s(seed);
  const Symbol c = "c";
  const auto sigma = detail::ab();
  const auto full = build_thm4(universal(sigma), c);
  const auto cut = build_thm4(empty_language(sigma), c);

  auto& u = r.add("universal L: sampled words accepted");
  for (int i = 0; i < 300; ++i) {
    auto w = s.word_upto(detail::abc(), 6);
    u.expect(member(full.built, w), detail::show(w));
  }

  auto& e = r.add("empty L: u d c x accepted iff d = 1 and x in R1");
  std::size_t positives = 0;
  for (int i = 0; i < 200; ++i) {
    auto uw = s.word_upto(sigma, 3, {4, 2});
    const Rational d = s.coin() ? Rational(1) : s.delay({4, 2});
    const auto t1 = detail::unit_fraction(s);
    const auto t2 = s.coin() ? Rational(1) - t1 : detail::off_by(s, t1);
    auto x = s.below(4) == 0 ? s.word_upto(sigma, 4, {4, 1}) : detail::r1_word(t1, t2);
    auto w = uw + detail::word({{d, "c"}}) + x;
    const bool in = member(cut.built, w);
    positives += in ? 1 : 0;
    e.expect(in == (d == Rational(1) && oracle::in_R1(x)), detail::show(w));
  }
  e.note = std::to_string(positives) + " of 200 accepted";

  auto& sh = r.add("empty L shuffled with R2: u 1 c w accepted iff t1 + t2 = 1 on R3-shaped w");
  const auto sw = shuffle_automaton(cut.built, gadget_R2());
  for (int i = 0; i < 24; ++i) {
    auto uw = s.word_upto(sigma, 1, {2, 1});
    const auto t1 = detail::unit_fraction(s);
    const auto t2 = i % 2 == 0 ? Rational(1) - t1 : detail::off_by(s, t1);
    auto x = detail::r3_word(t1, s.delay({4, 1}), t2);
    auto w = uw + detail::word({{Rational(1), "c"}}) + x;
    sh.expect(decide_stopwatch(sw, w) == (oracle::in_R1R2_R3(x) ? Verdict::accept : Verdict::reject), detail::show(w));
  }
  return r;
}

/// Büchi reduction over lasso words.
inline SuiteReport suite_tba(std::uint64_t seed) {
  SuiteReport r{"tba", seed, {}};
  Sampler s(seed);
  const Symbol c = "c";
  const auto sigma = detail::ab();
  const auto full = build_tba_reduction(universal<Acceptance::buchi>(sigma), c);
  const auto cut = build_tba_reduction(empty_language<Acceptance::buchi>(sigma), c);

  std::vector<std::pair<const TimedBuchiAutomaton*, LassoTimedWord>> accepted;

  auto& u = r.add("universal L: sampled lassos accepted", 7);
  for (int i = 0; i < 100; ++i) {
    auto w = s.lasso(detail::abc(), 4, 3);
    const bool in = member_lasso(full.built, w);
    u.expect(in, detail::show(w));
    if (in && accepted.size() < 40) accepted.emplace_back(&full.built, w);
  }

  auto& two = r.add("lassos with at least two c's accepted", 7);
  for (int i = 0; i < 100; ++i) {
    auto w = s.lasso(detail::abc(), 4, 3);
    if (s.coin()) {
      w.period.events.insert(w.period.events.begin() + static_cast<std::ptrdiff_t>(s.below(w.period.size() + 1)),
                             {s.delay(), c});
    } else {
      w.prefix.push(s.delay(), c);
      w.prefix.push(s.delay(), c);
      for (auto& e : w.period.events)
        if (e.letter == c) e.letter = "a";
    }
    two.expect(member_lasso(cut.built, w), detail::show(w));
  }

  auto& e = r.add("empty L: u 1 c | v accepted iff u in A", 7);
  std::size_t positives = 0;
  for (int i = 0; i < 100; ++i) {
    LassoTimedWord w;
    auto uw = s.below(5) == 0 ? s.word_upto(sigma, 4, {4, 1}) : s.word_upto({"a"}, 5, {4, 1});
    w.prefix = uw;
    w.prefix.push(Rational(1), c);
    w.period = s.word(sigma, 1 + s.below(3));
    const bool in = member_lasso(cut.built, w);
    positives += in ? 1 : 0;
    e.expect(in == oracle::in_A(uw), detail::show(w));
    if (in && accepted.size() < 80) accepted.emplace_back(&cut.built, w);
  }
  e.note = std::to_string(positives) + " of 100 accepted";

  auto& un = r.add("accepting lasso runs replay on unrollings with k repeated visits, k <= 20");
  for (const auto& [aut, w] : accepted) {
    auto run = accepting_lasso_run(*aut, w);
    if (!run) {
      un.expect(false, detail::show(w));
      continue;
    }
    const auto fin = aut->final_mask();
    bool ok = true;
    for (std::size_t k = 1; k <= 20 && ok; ++k) {
      std::vector<std::size_t> seq = run->stem;
      for (std::size_t j = 0; j < k; ++j) seq.insert(seq.end(), run->cycle.begin(), run->cycle.end());
      auto visited = replay(*aut, run->start, unroll(w, seq.size()), seq);
      std::size_t hits = 0;
      if (visited)
        for (std::size_t i = run->stem.size() + 1; i < visited->size(); ++i) hits += fin[(*visited)[i]] ? 1 : 0;
      ok = visited.has_value() && hits >= k;
    }
    un.expect(ok, detail::show(w));
  }

  auto& em = r.add("Büchi emptiness of the reductions");
  em.expect(!is_empty_buchi(full.built), "universal L");
  em.expect(!is_empty_buchi(cut.built), "empty L");
  em.expect(is_empty_buchi(empty_language<Acceptance::buchi>(sigma)), "empty TBA");
  return r;
}

/// The R1/R2 characterization and the shuffle conservation laws.
inline SuiteReport suite_shuffle(std::uint64_t seed) {
  SuiteReport r{"shuffle", seed, {}};
  Sampler s(seed);
  const auto R1 = gadget_R1(), R2 = gadget_R2();
  const auto sw = shuffle_automaton(R1, R2);

  auto& ch = r.add("R3-shaped words: stopwatch verdict equals t1 + t2 = 1", 4);
  auto& wit = r.add("positive R3-shaped words decompose into R1 and R2 witnesses", 4);
  std::size_t positives = 0;
  for (int i = 0; i < 200; ++i) {
    const auto t1 = detail::unit_fraction(s);
    const auto sdelay = s.delay({8, 2});
    const auto t2 = i % 2 == 0 ? Rational(1) - t1 : detail::off_by(s, t1);
    auto w = detail::r3_word(t1, sdelay, t2);
    const bool expected = t1 + t2 == Rational(1);
    positives += expected ? 1 : 0;
    const auto v = decide_stopwatch(sw, w);
    ch.expect(v == (expected ? Verdict::accept : Verdict::reject), detail::show(w) + " " + to_string(v));
    if (expected) {
      auto x = detail::r1_word(t1, t2), y = detail::r2_word(sdelay);
      wit.expect(member(R1, x) && member(R2, y) && shuffle_member(w, x, y), detail::show(w));
    }
  }
  ch.note = std::to_string(positives) + " of 200 with t1 + t2 = 1";

  auto& trip = r.add("sampled shuffles round-trip through shuffle_member", 8);
  auto& sym = r.add("symmetry", 8);
  auto& dur = r.add("duration additivity", 8);
  auto& inter = r.add("decompositions interleave x and y", 8);
  auto& agree = r.add("samples from R1 and R2 accepted by the shuffle automaton");
  for (int i = 0; i < 200; ++i) {
    const bool gadgets = i % 2 == 0;
    TimedWord x, y;
    if (gadgets) {
      const auto t1 = detail::unit_fraction(s);
      x = detail::r1_word(t1, Rational(1) - t1);
      y = detail::r2_word(s.delay());
    } else {
      x = s.word_upto(detail::ab(), 4);
      y = s.word_upto(detail::ab(), 4);
    }
    auto w = sample_shuffle(x, y, 1, s).front();
    auto d = shuffle_decompose(w, x, y);
    trip.expect(d.has_value(), detail::show(w));
    sym.expect(shuffle_member(w, x, y) == shuffle_member(w, y, x), detail::show(w));
    dur.expect(!d || w.duration() == x.duration() + y.duration(), detail::show(w));
    inter.expect(d && factors(w, *d) == std::make_pair(x, y), detail::show(w));
    if (gadgets) agree.expect(member_stopwatch(sw, w), detail::show(w));
  }

  auto& lp = r.add("shuffle_member agrees with the brute-force LP oracle");
  for (int i = 0; i < 200; ++i) {
    auto x = s.word_upto(detail::ab(), 3, {4, 1});
    auto y = s.word_upto(detail::ab(), 3, {4, 1});
    auto w = sample_shuffle(x, y, 1, s).front();
    if (!w.empty() && s.coin()) {
      auto& e = w.events[s.below(w.size())];
      e.delay += Rational(1, 4);
    }
    lp.expect(shuffle_member(w, x, y) == oracle::shuffle(w, x, y), detail::show(w));
  }

  auto& unit = r.add("empty word is a unit");
  for (int i = 0; i < 50; ++i) {
    auto x = s.word_upto(detail::ab(), 5);
    auto copies = sample_shuffle(x, TimedWord{}, 3, s);
    bool ok = shuffle_member(x, x, TimedWord{});
    for (const auto& w : copies) ok = ok && w == x;
    unit.expect(ok, detail::show(x));
  }
  return r;
}

/// Complement of deterministic automata is pointwise negation.
inline SuiteReport suite_complement(std::uint64_t seed) {
  SuiteReport r{"complement", seed, {}};
  Sampler s(seed);

  TimedAutomaton d3;
  d3.name = "D3";
  d3.alphabet = detail::ab();
  const ClockId x = d3.add_clock("x"), y = d3.add_clock("y");
  const auto p = d3.add_location("p"), q = d3.add_location("q");
  d3.initial = {p};
  d3.final = {q};
  d3.add_transition(p, "a", {{x, Relation::lt, 1}}, {x}, p);
  d3.add_transition(p, "a", {{x, Relation::ge, 1}, {y, Relation::le, 2}}, {}, q);
  d3.add_transition(p, "a", {{x, Relation::ge, 1}, {y, Relation::gt, 2}}, {y}, p);
  d3.add_transition(q, "b", {{y, Relation::gt, 1}}, {x, y}, p);
  d3.add_transition(q, "a", {{x, Relation::eq, 2}}, {}, q);

  const std::vector<TimedAutomaton> ds{gadget_R1(), gadget_L2(detail::ab(), "c"), d3};
  const std::vector<Rational> halves{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2),
                                     Rational(3)};
  for (const auto& d : ds) {
    auto& det = r.add(d.name + " is deterministic", 5);
    det.expect(is_deterministic(d).deterministic);
    auto& law = r.add(d.name + ": complement is pointwise negation", 5);
    const auto cd = complement_det(d);
    const auto seedword = witness(d);
    std::size_t in = 0;
    for (int i = 0; i < 500; ++i) {
      TimedWord w;
      if (i % 2 == 0) {
        w = s.word_from(d.alphabet, halves, s.below(7));
      } else {
        w = seedword;
        for (auto& e : w.events)
          if (s.coin()) e.delay = s.pick(halves);
      }
      const bool m = member(d, w);
      in += m ? 1 : 0;
      law.expect(member(cd, w) == !m, detail::show(w));
    }
    law.note = std::to_string(in) + " of 500 words in " + d.name;
  }
  return r;
}

/// Region graph soundness.
inline SuiteReport suite_regions(std::uint64_t seed) {
  SuiteReport r{"regions", seed, {}};
  Sampler s(seed);
  const auto sigma = detail::ab();
  const Symbol c = "c";
  const std::vector<TimedAutomaton> nonempty{
      gadget_A(),
      gadget_An({"a"}, "a", 2),
      gadget_R1(),
      gadget_R2(),
      gadget_R3(),
      gadget_L2(sigma, c),
      build_thm1(universal(sigma), c).built,
      build_thm1(empty_language(sigma), c).built,
      build_thm2(empty_language(sigma), 2, c).built,
      build_thm4(empty_language(sigma), c).built,
  };
  auto& wit = r.add("witness is accepted", 6);
  for (const auto& a : nonempty) {
    bool ok = false;
    try {
      ok = !is_empty(a) && member(a, witness(a));
    } catch (const std::exception&) {
      ok = false;
    }
    wit.expect(ok, a.name);
  }

  auto& un = r.add("untime(gadget_A) is a^k, k >= 2", 6);
  Nfa two;
  two.alphabet = {"a"};
  two.states = 3;
  two.initial = {0};
  two.accepting = {false, false, true};
  two.edges = {{0, "a", 1}, {1, "a", 2}, {2, "a", 2}};
  un.expect(nfa_equivalent(untime(gadget_A()), two));

  auto& cnt = r.add("one clock with K = 1 has 4 regions", 6);
  cnt.expect(regions::count(1, 1) == 4 && oracle::region_count(1, 1) == 4);
  const auto ga = build_region_automaton(gadget_A());
  cnt.expect(ga.states.size() <= gadget_A().locations.size() * 4);

  auto& formula = r.add("closed-form region count matches enumeration");
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::int64_t k = 0; k <= 2; ++k)
      formula.expect(regions::count(n, k) == oracle::region_count(n, k),
                     "n = " + std::to_string(n) + ", K = " + std::to_string(k));

  auto& proj = r.add("letter projections of accepted words are accepted by untime");
  const auto thm1 = build_thm1(empty_language(sigma), c).built;
  const auto nfa = untime(thm1);
  std::size_t found = 0;
  for (int i = 0; i < 5000 && found < 200; ++i) {
    auto w = s.word_upto(detail::abc(), 6, {2, 2});
    if (!member(thm1, w)) continue;
    ++found;
    proj.expect(nfa.accepts(w.letters()), detail::show(w));
  }

  auto& empt = r.add("emptiness");
  empt.expect(is_empty(empty_language(sigma)), "empty automaton");
  empt.expect(is_empty(product(gadget_A(sigma), empty_language(sigma))), "product with empty");
  empt.expect(is_empty(product(gadget_R1(), gadget_R3())), "R1 and R3 differ in shape");
  empt.expect(is_empty(product(gadget_A(sigma), gadget_R2())), "a-words and b-words");
  empt.expect(!is_empty(build_thm2(empty_language(sigma), 2, c).built), "thm2 with empty L");

  auto& zeno = r.add("Büchi emptiness requires time divergence");
  TimedBuchiAutomaton z;
  z.name = "zeno";
  z.alphabet = {"a"};
  const ClockId zx = z.add_clock("x");
  z.initial = z.final = {z.add_location("q")};
  z.add_transition(0, "a", {{zx, Relation::lt, 1}}, {}, 0);
  zeno.expect(is_empty_buchi(z), "x < 1 without reset");
  z.transitions[0].resets = {zx};
  zeno.expect(!is_empty_buchi(z), "x < 1 with reset");
  zeno.expect(!is_empty_buchi(universal<Acceptance::buchi>(sigma)), "universal");
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gadgets", "thm1", "thm2", "thm4", "tba", "shuffle", "complement", "regions"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed = 0) {
  if (name == "gadgets") return suite_gadgets(seed);
  if (name == "thm1") return suite_thm1(seed);
  if (name == "thm2") return suite_thm2(seed);
  if (name == "thm4") return suite_thm4(seed);
  if (name == "tba") return suite_tba(seed);
  if (name == "shuffle") return suite_shuffle(seed);
  if (name == "complement") return suite_complement(seed);
  if (name == "regions") return suite_regions(seed);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace tempo::testing
