// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "shiftmax/brick.hpp"
#include "shiftmax/certify.hpp"
#include "shiftmax/io.hpp"
#include "shiftmax/linalg.hpp"
#include "shiftmax/optimize.hpp"
#include "shiftmax/polytope.hpp"

using namespace shiftmax;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds)
    o.require(false, "runtime " + std::to_string(secs) + " s over the " + std::to_string(limit_seconds) + " s limit");
  if (!o.ok) ++failures;
  std::printf("%s  [%2d] %-58s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : "  ",
              o.detail.c_str());
  std::fflush(stdout);
}

std::set<std::string> cycle_words(unsigned n) {
  std::set<std::string> out;
  for (const auto& c : cycles_of(n)) out.insert(c.measure().str());
  return out;
}

}  // namespace

int main() {
  criterion(1, "cycle census C_1..C_5", 5, [](Outcome& o) {
    o.require(cycle_words(1) == std::set<std::string>{"0", "1"}, "C_1");
    o.require(cycle_words(2) == std::set<std::string>{"0", "1", "01"}, "C_2");
    o.require(cycle_words(3) == std::set<std::string>{"0", "1", "01", "001", "011", "0011"}, "C_3");
    for (unsigned n = 4; n <= 5; ++n) {
      auto oracle = oracle::necklace_cycle_set(n);
      o.require(cycles_of(n).size() == oracle.size() && cycle_words(n) == oracle,
                "C_" + std::to_string(n) + " differs from the necklace oracle");
    }
  });

  criterion(2, "Hamiltonian cycle counts n = 2..6", 60, [](Outcome& o) {
    const std::uint64_t expected[] = {1, 1, 2, 16, 2048};
    for (unsigned n = 2; n <= 6; ++n) {
      const auto count = hamiltonian_count(n);
      o.require(count == expected[n - 2], "count at n = " + std::to_string(n));
      o.require(mpz_class(count) == hamiltonian_formula(n), "formula at n = " + std::to_string(n));
    }
  });

  criterion(3, "face lattice of R_3", 10, [](Outcome& o) {
    const auto& p = polytope_of(3);
    auto census = face_census(face_lattice(p), p.dimension());
    o.require(census.by_dimension == std::vector<std::size_t>{1, 6, 13, 13, 6, 1}, "counts by dimension");
    o.require(census.total == 40, "total");
    o.require(census.facet_sizes == std::map<std::size_t, std::size_t>{{4, 4}, {5, 2}}, "facet split");
  });

  criterion(4, "dim R_n = 2^(n-1), n = 1..5", 0, [](Outcome& o) {
    for (unsigned n = 1; n <= 5; ++n) {
      RationalMatrix pts;
      for (const auto& v : polytope_of(n).vertices()) pts.push_back(v.frequencies);
      o.require(affine_dimension(pts) == (1 << (n - 1)), "n = " + std::to_string(n));
    }
  });

  criterion(5, "recursive complexities of 000111 and 01011", 0, [](Outcome& o) {
    o.require(recursive_complexity(PeriodicMeasure::parse("000111")) == 4, "000111");
    o.require(recursive_complexity(PeriodicMeasure::parse("01011")) == 5, "01011");
  });

  criterion(6, "Karp = vertex enumeration, 100 weightings per n <= 5", 0, [](Outcome& o) {
    std::mt19937_64 rng(606);
    for (unsigned n = 1; n <= 5; ++n)
      for (int t = 0; t < 100; ++t) {
        auto f = oracle::random_step(rng, n);
        o.require(karp_max_cycle_mean(DeBruijnGraph(n), f.values()) == ergodic_supremum(f).ergsup,
                  "mismatch at n = " + std::to_string(n));
      }
  });

  criterion(7, "gap over neighbors = gap over all vertices, n <= 4", 0, [](Outcome& o) {
    std::mt19937_64 rng(707);
    for (unsigned n = 1; n <= 4; ++n) {
      const auto& p = polytope_of(n);
      for (int t = 0; t < 100; ++t) {
        auto f = oracle::random_step(rng, n);
        auto r = ergodic_supremum(f, p, false);
        o.require(neighbor_gap(f, p, r.maximizer_index) == r.gap, "mismatch at n = " + std::to_string(n));
      }
    }
  });

  criterion(8, "Haar round trip and A_n dual definitions, 200 functions", 0, [](Outcome& o) {
    std::mt19937_64 rng(808);
    for (int t = 0; t < 200; ++t) {
      const unsigned level = t % 7;
      auto f = oracle::random_step(rng, level);
      auto h = forward_transform(f);
      o.require(inverse_transform(h) == f, "round trip");
      for (unsigned k = 0; k < level; ++k)
        for (std::uint64_t b = 0; b < word_count(k); ++b)
          o.require(h.coeff(Word(b, k)) == oracle::haar_by_integration(f, oracle::bits_string(b, k)),
                    "coefficient vs integration");
      for (unsigned n = 0; n <= level; ++n) truncate(f, n);  // throws on disagreement
    }
  });

  criterion(9, "basin identity and cancellation inequality", 0, [](Outcome& o) {
    for (unsigned n = 1; n <= 4; ++n)
      for (const auto& c : cycles_of(n))
        for (unsigned s = 0; s <= 3; ++s)
          o.require(basin_intersection_check(c.measure(), n, s), "basin identity for " + c.measure().str());
    std::mt19937_64 rng(909);
    int trials = 0;
    while (trials < 500) {
      const unsigned n = 1 + rng() % 4;
      const unsigned k = n + rng() % (5 - n);
      const auto& cn = cycles_of(n);
      const auto& ck = cycles_of(k);
      auto mu = cn[rng() % cn.size()].measure();
      auto xi = ck[rng() % ck.size()].measure();
      if (mu.period() > xi.period()) continue;
      ++trials;
      o.require(cancellation_bound_check(oracle::random_step(rng, k), mu, xi, n),
                "cancellation for " + mu.str() + ", " + xi.str());
    }
  });

  criterion(10, "beta decomposition of pi_3", 0,
            [](Outcome& o) { o.require(beta_projection_decomposition_check(), "pi_3 mismatch"); });

  ExperimentConfig config;
  config.sequence = SequenceSpec::standard();
  config.gauge = GaugeSpec(GaugeRule::Pow2Scaled);
  config.depth = 4;
  config.samples = 1000;
  config.seed = 42;

  criterion(11, "prevalence at desk scale (N = 1000, D = 4, seed 42)", 120, [&](Outcome& o) {
    auto r = run_experiment(config);
    const auto& top = r.levels.back();
    o.require(*top.cumulative_rate >= Rational(99, 100), "certification rate " + to_string(*top.cumulative_rate));
    const double N = static_cast<double>(config.samples);
    for (const auto& l : r.levels) {
      if (l.bound.bound >= 1) continue;
      const double p = l.failure_rate->get_d();
      const double slack = 4 * std::sqrt(p * (1 - p) / N);
      o.require(p <= l.bound.bound.get_d() + slack, "level " + std::to_string(l.level) + " failure rate " +
                                                        to_string(*l.failure_rate) + " above bound");
    }
    std::printf("      certified by level:");
    for (const auto& l : r.levels) std::printf(" %u:%s", l.level, to_string(*l.cumulative_rate).c_str());
    std::printf("\n      failure rate vs bound:");
    for (const auto& l : r.levels)
      std::printf(" %u:%s<=2^%s", l.level, to_string(*l.failure_rate).c_str(), log2_string(l.bound.bound).c_str());
    std::printf("\n");
  });

  criterion(12, "determinism across runs and thread counts", 0, [&](Outcome& o) {
    ExperimentConfig c = config;
    c.samples = 300;
    const auto a = io::to_json(run_experiment(c, 1)).dump();
    const auto b = io::to_json(run_experiment(c, 1)).dump();
    const auto d = io::to_json(run_experiment(c, 4)).dump();
    const auto e = io::to_json(run_experiment(c, 0)).dump();
    o.require(a == b, "two single-threaded runs differ");
    o.require(a == d && a == e, "thread count changes the report");
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
