#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "shiftmax/debruijn.hpp"
#include "shiftmax/rational.hpp"

namespace shiftmax {

inline constexpr unsigned kMaxFaceLevel = 4;

struct Vertex {
  Cycle cycle;
  PeriodicMeasure measure;
  std::vector<Rational> frequencies;  // pi_n(measure)
  ArcSet arcs;
};

/// A face of R_n, keyed by its cycle-closed arc support.
struct Face {
  ArcSet support;
  std::vector<std::size_t> vertices;
  int dim = -1;
};

/// R_n = pi_n(invariant measures), realized as the circulation polytope of
/// G_n: one vertex per simple cycle.
class RotationPolytope {
 public:
  RotationPolytope(unsigned n, std::vector<Vertex> vertices, int dimension);

  unsigned n() const { return n_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return dimension_; }
  std::optional<std::size_t> find(const PeriodicMeasure& m) const;

 private:
  unsigned n_;
  std::vector<Vertex> vertices_;
  int dimension_;
};

/// Nonnegative, total mass 1, Kirchhoff balance at every node of G_n.
bool is_circulation(unsigned n, const std::vector<Rational>& weights);

RotationPolytope build_polytope(unsigned n, unsigned cap = kDefaultCycleCap);
/// Memoized build_polytope; thread-safe.
const RotationPolytope& polytope_of(unsigned n, unsigned cap = kDefaultCycleCap);

/// Vertices whose cycle lies inside the arc set.
std::vector<std::size_t> cycles_within(const RotationPolytope& p, const ArcSet& support);

/// [v_i, v_j] is an edge iff the union of the two cycles carries no third
/// cycle: that union's circulation polytope is the smallest face holding
/// both vertices, and a face with two vertices is a segment.
bool is_edge(const RotationPolytope& p, std::size_t i, std::size_t j);
std::vector<std::size_t> neighbors(const RotationPolytope& p, std::size_t i);
std::vector<std::pair<std::size_t, std::size_t>> edges(const RotationPolytope& p);

/// Every face, one per arc subset equal to the union of its own cycles
/// (the empty set gives the empty face). Capped at n <= 4.
std::vector<Face> face_lattice(const RotationPolytope& p);

struct FaceCensus {
  std::vector<std::size_t> by_dimension;            // index dim + 1
  std::map<std::size_t, std::size_t> facet_sizes;   // vertex count -> number of facets
  std::size_t total = 0;
};
FaceCensus face_census(const std::vector<Face>& faces, int polytope_dimension);

/// Writes a circulation as a convex combination of vertices whose cycles lie
/// in its support, by peeling cycles off the support. Returns (vertex, weight).
std::vector<std::pair<std::size_t, Rational>> decompose_circulation(const RotationPolytope& p,
                                                                    const std::vector<Rational>& circulation);

}  // namespace shiftmax
