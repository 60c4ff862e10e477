#include "helpers.hpp"
#include "tempo/testing/suites.hpp"

using namespace tempo;
using namespace tempo_test;

TEST_CASE("samplers are reproducible") {
  Sampler a(99), b(99);
  for (int i = 0; i < 50; ++i) CHECK(a.word_upto({"a", "b"}, 6) == b.word_upto({"a", "b"}, 6));
  Sampler c(100);
  bool differs = false;
  for (int i = 0; i < 50; ++i) differs = differs || a.word_upto({"a", "b"}, 6) != c.word_upto({"a", "b"}, 6);
  CHECK(differs);
}

TEST_CASE("sampled delays respect the delay bounds") {
  Sampler s(5);
  for (int i = 0; i < 1000; ++i) {
    auto d = s.delay({8, 1});
    CHECK(d.sign() > 0);
    CHECK(d <= Q(1));
    CHECK(d.denominator() <= 8);
  }
  for (int i = 0; i < 100; ++i) {
    auto l = s.lasso({"a"}, 3, 3);
    CHECK_FALSE(l.period.empty());
    CHECK(l.prefix.size() <= 3);
  }
}

TEST_CASE("grid enumeration") {
  GridSpec g{2, {1, 2}, 2};
  CHECK(g.delays() == std::vector<Rational>{Q(1, 2), Q(1), Q(2)});
  std::size_t n = 0;
  for_each_grid_word({"a", "b"}, g, [&](const TimedWord&) {
    ++n;
    return true;
  });
  CHECK(n == 1 + 6 + 36);
}

TEST_CASE("bounded universality") {
  auto v = bounded_universality(gadget_A(), GridSpec{});
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->empty());
  CHECK_FALSE(member(gadget_A(), *v.counterexample));

  auto full = build_thm1(universal({"a", "b"}), "c");
  auto none = bounded_universality(full.built, GridSpec{});
  CHECK_FALSE(none.counterexample);
  CHECK(none.words_checked > 0);

  auto cut = build_thm1(empty_language({"a", "b"}), "c");
  auto ce = bounded_universality(cut.built, GridSpec{});
  REQUIRE(ce.counterexample);
  CHECK(oracle::occurrences(*ce.counterexample, "c") == 1);
}

TEST_CASE("suite registry") {
  CHECK(testing::suite_names().size() == 8);
  CHECK_THROWS_AS(testing::run_suite("unknown"), std::invalid_argument);
}

TEST_CASE("suite reports are deterministic under a seed") {
  auto a = testing::run_suite("gadgets", 3), b = testing::run_suite("gadgets", 3);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].total == b.checks[i].total);
    CHECK(a.checks[i].note == b.checks[i].note);
  }
}

TEST_CASE("thm2 suite carries the clock bound") {
  auto r = testing::run_suite("thm2");
  bool found = false;
  for (const auto& c : r.checks) found = found || c.name.find("clocks <=") != std::string::npos;
  CHECK(found);
  CHECK(r.passed());
}
