#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shiftmax/haar.hpp"

using namespace shiftmax;

namespace {

StepFunction step(unsigned level, std::vector<Rational> v) { return StepFunction(level, std::move(v)); }
Word W(const char* s) { return Word::parse(s); }

}  // namespace

TEST_CASE("word basics") {
  CHECK(Word::parse("").empty());
  CHECK(W("0110").str() == "0110");
  CHECK(W("0110").at(1) == 1);
  CHECK(W("0110").prefix(2) == W("01"));
  CHECK(W("0110").suffix_from(1) == W("110"));
  CHECK(W("01").append(1) == W("011"));
  CHECK_THROWS_AS(W("01").at(2), Error);
  CHECK_THROWS_AS(Word::parse("012"), Error);
}

TEST_CASE("haar_eval") {
  CHECK(haar_eval(W(""), W("0")) == Rational(1, 2));
  CHECK(haar_eval(W(""), W("1")) == Rational(-1, 2));
  CHECK(haar_eval(W("01"), W("110")) == 0);
  CHECK(haar_eval(W("01"), W("011")) == Rational(-1, 2));
  CHECK_THROWS_WITH_AS(haar_eval(W("01"), W("01")), "insufficient depth", Error);
}

TEST_CASE("forward transform examples") {
  auto h = forward_transform(StepFunction::indicator(W("0")));
  CHECK(h.mean() == Rational(1, 2));
  CHECK(h.coeff(W("")) == 1);

  auto c = forward_transform(StepFunction::constant(7, 3));
  CHECK(c.mean() == 7);
  for (auto& x : c.dense()) CHECK(x == 0);
  CHECK(c.dense().size() == 7);

  auto f = StepFunction::indicator(W("01"));
  auto h01 = forward_transform(f);
  for (const char* w : {"", "0", "1"}) CHECK(h01.coeff(W(w)) == oracle::haar_by_integration(f, w));
  CHECK(inverse_transform(h01) == f);
}

TEST_CASE("inverse transform examples") {
  CHECK(inverse_transform(HaarCoefficients(1, Rational(1, 2), {Rational(1)})) == StepFunction::indicator(W("0")));
  CHECK(inverse_transform(HaarCoefficients(2)) == StepFunction::constant(0, 2));
}

TEST_CASE("forward transform agrees with direct integration") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    const unsigned level = 1 + t % 5;
    auto f = oracle::random_step(rng, level);
    auto h = forward_transform(f);
    for (unsigned k = 0; k < level; ++k)
      for (std::uint64_t b = 0; b < word_count(k); ++b)
        CHECK(h.coeff(Word(b, k)) == oracle::haar_by_integration(f, oracle::bits_string(b, k)));
  }
}

TEST_CASE("round trip is exact up to level 8") {
  std::mt19937_64 rng(2);
  for (unsigned level = 0; level <= 8; ++level) {
    auto f = oracle::random_step(rng, level);
    CHECK(inverse_transform(forward_transform(f)) == f);
  }
  for (int t = 0; t < 20; ++t) {
    HaarCoefficients h(3);
    h.mean() = oracle::random_rational(rng);
    for (unsigned k = 0; k < 3; ++k)
      for (std::uint64_t b = 0; b < word_count(k); ++b) h.coeff(Word(b, k)) = oracle::random_rational(rng);
    CHECK(forward_transform(inverse_transform(h)) == h);
  }
}

TEST_CASE("lifting duplicates values") {
  auto f = step(1, {3, 5});
  CHECK(f.lift(2) == step(2, {3, 3, 5, 5}));
  CHECK(forward_transform(f.lift(3)) == forward_transform(f).extend(3));
}

TEST_CASE("truncate examples") {
  auto x1 = step(2, {0, 0, 1, 1});  // f(x) = x_1
  CHECK(truncate(x1, 1) == step(1, {0, 1}));
  CHECK(truncate(x1, 0) == StepFunction::constant(Rational(1, 2)));
  auto chi01 = StepFunction::indicator(W("01"));
  CHECK(truncate(chi01, 1) == step(1, {Rational(1, 2), 0}));
  CHECK(truncate(chi01, 2) == chi01);
  CHECK_THROWS_AS(truncate(chi01, 3), Error);
}

TEST_CASE("truncation dual definitions on random functions") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const unsigned level = t % 7;
    auto f = oracle::random_step(rng, level);
    for (unsigned n = 0; n <= level; ++n) {
      auto a = truncate(f, n);  // throws std::logic_error if the two definitions differ
      // Cylinder-average oracle.
      for (std::uint64_t c = 0; c < word_count(n); ++c) {
        Rational sum(0);
        const std::uint64_t block = word_count(level - n);
        for (std::uint64_t i = 0; i < block; ++i) sum += f.at(c * block + i);
        CHECK(a.at(c) == sum / Rational(static_cast<unsigned long>(block)));
      }
    }
  }
}

TEST_CASE("variation examples") {
  auto chi0 = StepFunction::indicator(W("0"));
  CHECK(variation(chi0, 0) == 1);
  CHECK(variation(chi0, 1) == 0);
  auto chi01 = StepFunction::indicator(W("01"));
  CHECK(variation(chi01, 1) == 1);
  CHECK(variation(chi01, 2) == 0);
  CHECK(variation(chi01, 9) == 0);
  for (unsigned n = 0; n < 4; ++n) CHECK(variation(StepFunction::constant(3, 3), n) == 0);
}

TEST_CASE("lipschitz examples") {
  auto geo = SequenceSpec::geometric(Rational(1, 2));
  CHECK(lipschitz_constant(StepFunction::indicator(W("0")), geo) == 1);
  CHECK(lipschitz_constant(StepFunction::constant(5, 2), geo) == 0);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    auto f = oracle::random_step(rng, 4), g = oracle::random_step(rng, 4);
    auto lam = oracle::random_rational(rng);
    CHECK(lipschitz_constant(lam * f, geo) == abs(lam) * lipschitz_constant(f, geo));
    CHECK(lipschitz_constant(f + g, geo) <= lipschitz_constant(f, geo) + lipschitz_constant(g, geo));
  }
}

TEST_CASE("coefficient bounds from variation and Lipschitz constant") {
  std::mt19937_64 rng(5);
  auto a = SequenceSpec::standard();
  for (int t = 0; t < 50; ++t) {
    const unsigned level = 1 + t % 5;
    auto f = oracle::random_step(rng, level);
    auto h = forward_transform(f);
    auto lip = lipschitz_constant(f, a);
    for (unsigned n = 0; n + 1 < level; ++n) CHECK(variation(f, n + 1) <= variation(f, n));
    for (unsigned k = 0; k < level; ++k) {
      CHECK(h.level_max_abs(k) <= variation(f, k));
      CHECK(h.level_max_abs(k) <= a.term(k) * lip);
    }
  }
}

TEST_CASE("sup norm and variation bounds from coefficient bounds") {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> u(-64, 64);
  const unsigned level = 6;
  std::vector<Rational> bbar;
  for (unsigned k = 0; k < level; ++k) bbar.push_back(pow2(-static_cast<long>(k)));
  for (int t = 0; t < 30; ++t) {
    HaarCoefficients h(level);
    h.mean() = oracle::random_rational(rng);
    for (unsigned k = 0; k < level; ++k)
      for (std::uint64_t b = 0; b < word_count(k); ++b) h.coeff(Word(b, k)) = bbar[k] * Rational(u(rng), 64);
    auto f = inverse_transform(h);
    Rational half_sum(0);
    for (auto& b : bbar) half_sum += b / 2;
    CHECK(f.sup_norm() <= abs(h.mean()) + half_sum);
    for (unsigned n = 0; n < level; ++n) {
      Rational tail(0);
      for (unsigned k = n; k < level; ++k) tail += bbar[k];
      CHECK(variation(f, n) <= tail);
    }
  }
}

TEST_CASE("sequence families") {
  auto a = SequenceSpec::standard();
  CHECK(a.term(0) == 1);
  CHECK(a.term(1) == pow2(-4));
  CHECK(a.term(2) == pow2(-12));
  CHECK(a.term(3) == pow2(-28));
  CHECK(*a.log2_ratio(5) == -(1L << 7));
  auto g = SequenceSpec::geometric(Rational(1, 3));
  CHECK(g.term(2) == Rational(1, 9));
  CHECK_THROWS_AS(SequenceSpec::geometric(Rational(1)), Error);
  auto e = SequenceSpec::explicit_log2({0, -3, -7});
  CHECK(e.term(2) == pow2(-7));
  CHECK(e.term(4) == pow2(-15));
  CHECK_THROWS_AS(SequenceSpec::explicit_log2({0, 0}), Error);
}

TEST_CASE("tail bound") {
  auto a = SequenceSpec::standard();
  CHECK(tail_bound(0, a, GaugeSpec::zero(), 2) == 0);
  GaugeSpec b;  // 2^-n a_n
  for (unsigned n = 1; n <= 6; ++n) {
    Rational delta = tail_bound(1, a, b, n);
    Rational first = a.term(n) + b.level_max(n, a);
    CHECK(delta >= first);
    // Partial-sum oracle: delta covers it, and not by much.
    Rational partial(0);
    for (unsigned k = n; k <= 3 * n + 3; ++k) partial += Rational(k - n + 1) * (a.term(k) + pow2(-static_cast<long>(k)) * a.term(k));
    CHECK(delta >= partial);
    CHECK(delta <= partial * (1 + pow2(-100)));
  }
}
