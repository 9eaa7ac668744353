#include "shiftmax/polytope.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

#include "shiftmax/linalg.hpp"

namespace shiftmax {

RotationPolytope::RotationPolytope(unsigned n, std::vector<Vertex> vertices, int dimension)
    : n_(n), vertices_(std::move(vertices)), dimension_(dimension) {}

std::optional<std::size_t> RotationPolytope::find(const PeriodicMeasure& m) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].measure == m) return i;
  return std::nullopt;
}

bool is_circulation(unsigned n, const std::vector<Rational>& weights) {
  DeBruijnGraph g(n);
  if (weights.size() != g.arc_count()) return false;
  Rational total(0);
  for (const auto& w : weights) {
    if (w < 0) return false;
    total += w;
  }
  if (total != 1) return false;
  for (std::uint64_t v = 0; v < g.node_count(); ++v) {
    auto in = g.in_arcs(v);
    auto out = g.out_arcs(v);
    if (weights[in[0]] + weights[in[1]] != weights[out[0]] + weights[out[1]]) return false;
  }
  return true;
}

namespace {

/// Dimension of {x : Kirchhoff, sum x = 1}, an upper bound for dim R_n.
int circulation_space_dimension(unsigned n) {
  DeBruijnGraph g(n);
  RationalMatrix constraints;
  for (std::uint64_t v = 0; v < g.node_count(); ++v) {
    std::vector<Rational> row(g.arc_count(), Rational(0));
    for (auto a : g.out_arcs(v)) row[a] += 1;
    for (auto a : g.in_arcs(v)) row[a] -= 1;
    constraints.push_back(std::move(row));
  }
  constraints.emplace_back(g.arc_count(), Rational(1));
  return static_cast<int>(g.arc_count()) - rank(constraints);
}

}  // namespace

RotationPolytope build_polytope(unsigned n, unsigned cap) {
  const auto& cycles = cycles_of(n, cap);
  std::vector<Vertex> vertices;
  vertices.reserve(cycles.size());
  std::set<std::vector<Rational>> seen;
  RationalMatrix points;
  for (const auto& c : cycles) {
    PeriodicMeasure m = c.measure();
    auto pi = m.frequencies(n);
    if (!is_circulation(n, pi)) throw std::logic_error("cycle frequency vector is not a circulation");
    if (!seen.insert(pi).second) throw std::logic_error("pi_n is not injective on C_n");
    points.push_back(pi);
    vertices.push_back(Vertex{c, m, std::move(pi), c.arc_set()});
  }
  int dim = affine_dimension(points, circulation_space_dimension(n));
  return RotationPolytope(n, std::move(vertices), dim);
}

const RotationPolytope& polytope_of(unsigned n, unsigned cap) {
  if (n > cap) throw Error("cycle enumeration cap exceeded (n = " + std::to_string(n) + " > " +
                           std::to_string(cap) + ")");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<const RotationPolytope>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const RotationPolytope>(build_polytope(n, cap));
  return *slot;
}

std::vector<std::size_t> cycles_within(const RotationPolytope& p, const ArcSet& support) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.vertices()[i].arcs.is_subset_of(support)) out.push_back(i);
  return out;
}

bool is_edge(const RotationPolytope& p, std::size_t i, std::size_t j) {
  if (i == j) throw Error("edge test needs two distinct vertices");
  if (i >= p.size() || j >= p.size()) throw Error("vertex index out of range");
  ArcSet joint = p.vertices()[i].arcs | p.vertices()[j].arcs;
  std::size_t inside = 0;
  for (const auto& v : p.vertices())
    if (v.arcs.is_subset_of(joint) && ++inside > 2) return false;
  return inside == 2;
}

std::vector<std::size_t> neighbors(const RotationPolytope& p, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (j != i && is_edge(p, i, j)) out.push_back(j);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const RotationPolytope& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (is_edge(p, i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<Face> face_lattice(const RotationPolytope& p) {
  if (p.n() > kMaxFaceLevel) throw Error("face enumeration capped");
  const std::uint64_t arcs = word_count(p.n());
  std::vector<std::uint64_t> masks;
  for (const auto& v : p.vertices()) masks.push_back(v.arcs.to_ulong());

  std::vector<Face> faces;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << arcs); ++subset) {
    std::uint64_t covered = 0;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if ((masks[i] & ~subset) == 0) {
        covered |= masks[i];
        members.push_back(i);
      }
    }
    if (covered != subset) continue;
    RationalMatrix points;
    for (auto i : members) points.push_back(p.vertices()[i].frequencies);
    faces.push_back(Face{ArcSet(arcs, subset), std::move(members), affine_dimension(points)});
  }
  return faces;
}

FaceCensus face_census(const std::vector<Face>& faces, int polytope_dimension) {
  FaceCensus c;
  c.by_dimension.assign(static_cast<std::size_t>(polytope_dimension + 2), 0);
  for (const auto& f : faces) {
    ++c.by_dimension.at(static_cast<std::size_t>(f.dim + 1));
    if (f.dim == polytope_dimension - 1) ++c.facet_sizes[f.vertices.size()];
  }
  c.total = faces.size();
  return c;
}

std::vector<std::pair<std::size_t, Rational>> decompose_circulation(const RotationPolytope& p,
                                                                    const std::vector<Rational>& circulation) {
  if (!is_circulation(p.n(), circulation)) throw Error("input is not a circulation on G_" + std::to_string(p.n()));
  std::vector<Rational> rest(circulation);
  std::vector<std::pair<std::size_t, Rational>> parts;
  for (;;) {
    ArcSet support(rest.size());
    for (std::size_t a = 0; a < rest.size(); ++a)
      if (rest[a] > 0) support.set(a);
    if (support.none()) break;
    auto inside = cycles_within(p, support);
    if (inside.empty()) throw std::logic_error("support of a circulation carries no cycle");
    const auto& v = p.vertices()[inside.front()];
    Rational flow = rest[v.cycle.arcs.front()];
    for (auto a : v.cycle.arcs) flow = std::min(flow, rest[a]);
    for (auto a : v.cycle.arcs) rest[a] -= flow;
    parts.emplace_back(inside.front(), flow * Rational(v.cycle.length()));
  }
  return parts;
}

}  // namespace shiftmax
