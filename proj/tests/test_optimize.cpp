#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shiftmax/optimize.hpp"

using namespace shiftmax;

namespace {

PeriodicMeasure M(const char* s) { return PeriodicMeasure::parse(s); }
StepFunction chi(const char* w) { return StepFunction::indicator(Word::parse(w)); }

}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(chi("01"), M("01")) == Rational(1, 2));
  CHECK(evaluate(StepFunction::constant(3, 2), M("0011")) == 3);
  CHECK(evaluate(chi("0"), M("001")) == Rational(2, 3));
  std::mt19937_64 rng(20);
  for (int t = 0; t < 50; ++t) {
    auto f = oracle::random_step(rng, 3);
    for (const auto& c : cycles_of(3)) CHECK(evaluate(f, c.measure()) == oracle::orbit_average(f, c.measure().str()));
  }
}

TEST_CASE("ergodic supremum examples") {
  auto r1 = ergodic_supremum(chi("0"));
  CHECK(r1.ergsup == 1);
  CHECK(r1.maximizer.str() == "0");
  CHECK(r1.gap == 1);
  CHECK_FALSE(r1.tie);

  auto r2 = ergodic_supremum(chi("01"));
  CHECK(r2.ergsup == Rational(1, 2));
  CHECK(r2.maximizer.str() == "01");
  CHECK(r2.gap == Rational(1, 2));

  auto r0 = ergodic_supremum(StepFunction::constant(0, 2));
  CHECK(r0.gap == 0);
  CHECK(r0.tie);
  CHECK(r0.maximizer.str() == "0");  // lexicographically least
}

TEST_CASE("karp examples") {
  CHECK(karp_max_cycle_mean(DeBruijnGraph(2), {0, 1, 0, 0}) == Rational(1, 2));
  CHECK(karp_max_cycle_mean(DeBruijnGraph(3), std::vector<Rational>(8, Rational(7, 3))) == Rational(7, 3));
  CHECK(karp_max_cycle_mean(DeBruijnGraph(1), {Rational(-1), Rational(2)}) == 2);
}

TEST_CASE("karp agrees with enumeration") {
  std::mt19937_64 rng(21);
  for (unsigned n = 1; n <= 5; ++n) {
    for (int t = 0; t < 100; ++t) {
      auto f = oracle::random_step(rng, n);
      CHECK(karp_max_cycle_mean(DeBruijnGraph(n), f.values()) == ergodic_supremum(f).ergsup);
    }
  }
}

TEST_CASE("neighbor gap equals full gap") {
  std::mt19937_64 rng(22);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto& p = polytope_of(n);
    for (int t = 0; t < 100; ++t) {
      auto f = oracle::random_step(rng, n);
      auto r = ergodic_supremum(f, p, false);
      CHECK(neighbor_gap(f, p, r.maximizer_index) == r.gap);
    }
  }
}

TEST_CASE("argmax invariance and uniqueness") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> small(-1, 1);
  for (int t = 0; t < 100; ++t) {
    const unsigned n = 1 + t % 4;
    // Coarse values make ties common.
    std::vector<Rational> v(word_count(n));
    for (auto& x : v) x = small(rng);
    StepFunction f(n, v);
    auto r = ergodic_supremum(f);
    auto c = oracle::random_rational(rng);
    Rational lam = abs(oracle::random_rational(rng)) + 1;
    auto shifted = ergodic_supremum(f + StepFunction::constant(c, n));
    CHECK(shifted.ergsup == r.ergsup + c);
    CHECK(shifted.gap == r.gap);
    CHECK(shifted.maximizer == r.maximizer);
    auto scaled = ergodic_supremum(lam * f);
    CHECK(scaled.ergsup == lam * r.ergsup);
    CHECK(scaled.gap == lam * r.gap);
    CHECK(scaled.maximizer == r.maximizer);

    std::size_t attaining = 0;
    for (const auto& vert : polytope_of(n).vertices()) attaining += evaluate(f, vert.measure) == r.ergsup;
    CHECK(r.gap >= 0);
    CHECK(r.tie == (r.gap == 0));
    CHECK(r.tie == (attaining >= 2));
  }
}

TEST_CASE("cancellation bound") {
  CHECK(cancellation_bound_check(StepFunction::constant(0, 2), M("0"), M("01"), 2));
  std::mt19937_64 rng(24);
  for (int t = 0; t < 500; ++t) CHECK(cancellation_bound_check(oracle::random_step(rng, 2), M("0"), M("01"), 2));
  for (int t = 0; t < 50; ++t) CHECK(cancellation_bound_check(oracle::random_step(rng, 3), M("01"), M("0011"), 2));
  CHECK_THROWS_AS(cancellation_bound_check(StepFunction::constant(0, 2), M("0"), M("01"), 3), Error);
  CHECK_THROWS_AS(cancellation_bound_check(StepFunction::constant(0, 3), M("001"), M("01"), 2), Error);
}
