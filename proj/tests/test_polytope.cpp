#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shiftmax/linalg.hpp"
#include "shiftmax/polytope.hpp"

using namespace shiftmax;

namespace {

std::size_t idx(const RotationPolytope& p, const char* w) { return *p.find(PeriodicMeasure::parse(w)); }

std::set<std::string> neighbor_words(const RotationPolytope& p, const char* w) {
  std::set<std::string> out;
  for (auto j : neighbors(p, idx(p, w))) out.insert(p.vertices()[j].measure.str());
  return out;
}

}  // namespace

TEST_CASE("exact rank") {
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rank({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == 2);
  CHECK(affine_dimension({}) == -1);
  CHECK(affine_dimension({{1, 1}}) == 0);
  CHECK(affine_dimension({{1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 2)}}) == 1);
  EchelonBasis e(2);
  CHECK(e.add({1, 1}));
  CHECK_FALSE(e.add({3, 3}));
  CHECK(e.add({0, 1}));
  CHECK(e.rank() == 2);
}

TEST_CASE("vertex counts and dimensions") {
  CHECK(polytope_of(1).size() == 2);
  CHECK(polytope_of(1).dimension() == 1);
  CHECK(polytope_of(2).size() == 3);
  CHECK(polytope_of(2).dimension() == 2);
  CHECK(polytope_of(3).size() == 6);
  CHECK(polytope_of(3).dimension() == 4);
  for (unsigned n = 1; n <= 5; ++n) {
    const auto& p = polytope_of(n);
    CHECK(p.dimension() == (1 << (n - 1)));
    RationalMatrix pts;
    for (const auto& v : p.vertices()) pts.push_back(v.frequencies);
    CHECK(affine_dimension(pts) == p.dimension());
  }
}

TEST_CASE("vertices are distinct circulations") {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto& p = polytope_of(n);
    std::set<std::vector<Rational>, std::less<>> seen;
    for (const auto& v : p.vertices()) {
      CHECK(is_circulation(n, v.frequencies));
      CHECK(seen.insert(v.frequencies).second);
    }
  }
  CHECK_FALSE(is_circulation(2, {1, 0, 0, 0, 0}));
  CHECK_FALSE(is_circulation(2, {0, 1, 0, 0}));
  CHECK(is_circulation(2, {0, Rational(1, 2), Rational(1, 2), 0}));
}

TEST_CASE("edges") {
  const auto& p2 = polytope_of(2);
  CHECK(is_edge(p2, idx(p2, "0"), idx(p2, "1")));
  CHECK(edges(p2).size() == 3);
  CHECK(neighbor_words(p2, "01") == std::set<std::string>{"0", "1"});
  const auto& p3 = polytope_of(3);
  CHECK(edges(p3).size() == 13);
  CHECK(neighbor_words(p3, "0").size() == 5);
  CHECK(neighbor_words(p3, "1").size() == 5);
  CHECK(neighbor_words(p3, "0011").size() == 4);
  CHECK_THROWS_AS(is_edge(p3, 1, 1), Error);
}

TEST_CASE("hamiltonian vertices have 2^(n-1) neighbors") {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto& p = polytope_of(n);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p.vertices()[i].cycle.length() == (1U << (n - 1))) CHECK(neighbors(p, i).size() == (1U << (n - 1)));
  }
}

TEST_CASE("period-one vertices neighbor everything") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto& p = polytope_of(n);
    CHECK(neighbors(p, idx(p, "0")).size() == p.size() - 1);
    CHECK(neighbors(p, idx(p, "1")).size() == p.size() - 1);
  }
}

TEST_CASE("face lattice") {
  auto census3 = face_census(face_lattice(polytope_of(3)), 4);
  CHECK(census3.by_dimension == std::vector<std::size_t>{1, 6, 13, 13, 6, 1});
  CHECK(census3.total == 40);
  CHECK(census3.facet_sizes == std::map<std::size_t, std::size_t>{{4, 4}, {5, 2}});

  auto census1 = face_census(face_lattice(polytope_of(1)), 1);
  CHECK(census1.by_dimension == std::vector<std::size_t>{1, 2, 1});
  CHECK(census1.total == 4);

  for (unsigned n = 1; n <= 4; ++n) {
    const auto& p = polytope_of(n);
    auto faces = face_lattice(p);
    CHECK(faces.size() <= (std::size_t{1} << (1U << n)));
    for (const auto& f : faces) {
      // Support is exactly the union of the face's cycles.
      ArcSet u(word_count(n));
      for (auto v : f.vertices) u |= p.vertices()[v].arcs;
      CHECK(u == f.support);
      if (f.dim == 1) {
        REQUIRE(f.vertices.size() == 2);
        CHECK(is_edge(p, f.vertices[0], f.vertices[1]));
      }
    }
  }
  CHECK_THROWS_WITH_AS(face_lattice(polytope_of(5)), "face enumeration capped", Error);
}

TEST_CASE("circulations decompose over the cycles of their support") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> w(0, 5);
  const auto& p = polytope_of(3);
  for (int t = 0; t < 50; ++t) {
    // Random nonnegative combination of vertices, normalized.
    std::vector<Rational> circ(8);
    Rational total(0);
    for (const auto& v : p.vertices()) {
      Rational c = w(rng);
      for (std::size_t a = 0; a < 8; ++a) circ[a] += c * v.frequencies[a];
      total += c;
    }
    if (total == 0) continue;
    for (auto& x : circ) x /= total;
    REQUIRE(is_circulation(3, circ));
    auto parts = decompose_circulation(p, circ);
    std::vector<Rational> back(8);
    Rational mass(0);
    ArcSet support(8);
    for (std::size_t a = 0; a < 8; ++a) support[a] = circ[a] != 0;
    for (auto [v, c] : parts) {
      CHECK(c > 0);
      CHECK(p.vertices()[v].arcs.is_subset_of(support));
      mass += c;
      for (std::size_t a = 0; a < 8; ++a) back[a] += c * p.vertices()[v].frequencies[a];
    }
    CHECK(mass == 1);
    CHECK(back == circ);
  }
}
