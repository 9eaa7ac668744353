#pragma once

#include <cstddef>
#include <vector>

#include "shiftmax/debruijn.hpp"
#include "shiftmax/haar.hpp"
#include "shiftmax/polytope.hpp"

namespace shiftmax {

struct OptimizationResult {
  unsigned level = 1;
  Rational ergsup;
  PeriodicMeasure maximizer{Word::parse("0")};
  std::size_t maximizer_index = 0;
  Rational second_best;
  Rational gap;  // ergsup - second_best
  bool tie = false;
};

/// <f, m>: the mean of f over the orbit points of m.
Rational evaluate(const StepFunction& f, const PeriodicMeasure& m);

/// Maximizes <f, .> over the vertices of R_n (n = max(level, 1)). Ties go
/// to the lexicographically least canonical word and set `tie`.
/// For n <= 5 the gap is recomputed over the polytope neighbors of the
/// maximizer and must agree (std::logic_error otherwise).
OptimizationResult ergodic_supremum(const StepFunction& f, unsigned cap = kDefaultCycleCap);
OptimizationResult ergodic_supremum(const StepFunction& f, const RotationPolytope& polytope,
                                    bool check_neighbors = true);

/// ergsup - max over edge-neighbors of the maximizer.
Rational neighbor_gap(const StepFunction& f, const RotationPolytope& polytope, std::size_t maximizer);

/// Karp's maximum cycle mean over an arbitrary strongly connected digraph.
struct WeightedArc {
  std::size_t from;
  std::size_t to;
  Rational weight;
};
Rational max_cycle_mean(std::size_t node_count, const std::vector<WeightedArc>& arcs);

/// Karp on G_n with one weight per arc (arc index = word value).
Rational karp_max_cycle_mean(const DeBruijnGraph& g, const std::vector<Rational>& weights);

/// <g, xi> - <g, mu> <= 2 (k - n + 1) |g|_inf xi(complement of B_{mu,n}),
/// k = level(g). Requires mu in C_n, xi in C_k, n <= k, per(mu) <= per(xi).
bool cancellation_bound_check(const StepFunction& g, const PeriodicMeasure& mu, const PeriodicMeasure& xi,
                              unsigned n);

}  // namespace shiftmax
