#include "shiftmax/optimize.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace shiftmax {

Rational evaluate(const StepFunction& f, const PeriodicMeasure& m) {
  Rational sum(0);
  for (unsigned i = 0; i < m.period(); ++i) sum += f.at(m.orbit_prefix(i, f.level()).bits());
  return sum / Rational(m.period());
}

namespace {

Rational cycle_mean(const StepFunction& f, const Vertex& v) {
  Rational sum(0);
  for (auto a : v.cycle.arcs) sum += f.at(a);
  return sum / Rational(v.cycle.length());
}

}  // namespace

OptimizationResult ergodic_supremum(const StepFunction& f, unsigned cap) {
  const unsigned n = std::max(f.level(), 1U);
  return ergodic_supremum(f, polytope_of(n, cap));
}

OptimizationResult ergodic_supremum(const StepFunction& f, const RotationPolytope& polytope, bool check_neighbors) {
  if (f.level() > polytope.n()) throw Error("step function level exceeds the polytope level");
  const StepFunction g = f.lift(polytope.n());
  const auto& vertices = polytope.vertices();

  std::vector<Rational> values;
  values.reserve(vertices.size());
  for (const auto& v : vertices) values.push_back(cycle_mean(g, v));

  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best] || (values[i] == values[best] && vertices[i].measure < vertices[best].measure))
      best = i;
  }
  std::optional<Rational> second;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i != best && (!second || values[i] > *second)) second = values[i];

  OptimizationResult r;
  r.level = polytope.n();
  r.ergsup = values[best];
  r.maximizer = vertices[best].measure;
  r.maximizer_index = best;
  r.second_best = second.value_or(values[best]);
  r.gap = r.ergsup - r.second_best;
  r.tie = r.gap == 0;

  if (check_neighbors && polytope.n() <= 5 && neighbor_gap(g, polytope, best) != r.gap)
    throw std::logic_error("gap over edge neighbors disagrees with the gap over all vertices");
  return r;
}

Rational neighbor_gap(const StepFunction& f, const RotationPolytope& polytope, std::size_t maximizer) {
  const StepFunction g = f.lift(polytope.n());
  Rational top = cycle_mean(g, polytope.vertices()[maximizer]);
  std::optional<Rational> second;
  for (auto j : neighbors(polytope, maximizer)) {
    Rational v = cycle_mean(g, polytope.vertices()[j]);
    if (!second || v > *second) second = v;
  }
  return top - second.value_or(top);
}

Rational max_cycle_mean(std::size_t node_count, const std::vector<WeightedArc>& arcs) {
  if (node_count == 0) throw Error("graph has no nodes");
  // walk[k][v]: heaviest walk with exactly k arcs ending at v (any start).
  std::vector<std::vector<std::optional<Rational>>> walk(node_count + 1,
                                                         std::vector<std::optional<Rational>>(node_count));
  for (auto& w : walk[0]) w = Rational(0);
  for (std::size_t k = 1; k <= node_count; ++k) {
    for (const auto& arc : arcs) {
      const auto& prev = walk[k - 1][arc.from];
      if (!prev) continue;
      Rational candidate = *prev + arc.weight;
      auto& slot = walk[k][arc.to];
      if (!slot || candidate > *slot) slot = std::move(candidate);
    }
  }
  std::optional<Rational> best;
  for (std::size_t v = 0; v < node_count; ++v) {
    if (!walk[node_count][v]) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < node_count; ++k) {
      if (!walk[k][v]) continue;
      Rational mean = (*walk[node_count][v] - *walk[k][v]) / Rational(static_cast<unsigned long>(node_count - k));
      if (!worst || mean < *worst) worst = std::move(mean);
    }
    if (worst && (!best || *worst > *best)) best = std::move(worst);
  }
  if (!best) throw Error("graph has no cycle");
  return *best;
}

Rational karp_max_cycle_mean(const DeBruijnGraph& g, const std::vector<Rational>& weights) {
  if (weights.size() != g.arc_count()) throw Error("one weight per arc required");
  std::vector<WeightedArc> arcs;
  arcs.reserve(weights.size());
  for (std::uint64_t a = 0; a < g.arc_count(); ++a) arcs.push_back({g.source(a), g.target(a), weights[a]});
  return max_cycle_mean(g.node_count(), arcs);
}

bool cancellation_bound_check(const StepFunction& g, const PeriodicMeasure& mu, const PeriodicMeasure& xi,
                              unsigned n) {
  const unsigned k = g.level();
  if (n > k) throw Error("cancellation bound needs n <= k");
  if (mu.period() > xi.period()) throw Error("cancellation bound needs per(mu) <= per(xi)");
  if (recursive_complexity(mu) > n) throw Error("mu is not in C_n");
  if (recursive_complexity(xi) > k) throw Error("xi is not in C_k");

  const auto base = basin(mu, n);
  unsigned outside = 0;
  for (unsigned i = 0; i < xi.period(); ++i)
    if (!base.contains(xi.orbit_prefix(i, n))) ++outside;
  Rational escape(outside, xi.period());
  escape.canonicalize();

  Rational lhs = evaluate(g, xi) - evaluate(g, mu);
  Rational rhs = Rational(2 * (k - n + 1)) * g.sup_norm() * escape;
  return lhs <= rhs;
}

}  // namespace shiftmax
