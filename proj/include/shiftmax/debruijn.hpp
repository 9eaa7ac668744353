#pragma once

#include <boost/dynamic_bitset.hpp>

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "shiftmax/rational.hpp"
#include "shiftmax/word.hpp"

namespace shiftmax {

inline constexpr unsigned kMaxGraphLevel = 16;
inline constexpr unsigned kDefaultCycleCap = 6;

using ArcSet = boost::dynamic_bitset<std::uint64_t>;

/// G_n: nodes are the words of length n-1, arcs the words of length n, and
/// arc w runs from its initial (n-1)-subword to its final one. Node and arc
/// indices are the integer values of their words.
class DeBruijnGraph {
 public:
  explicit DeBruijnGraph(unsigned n);

  unsigned n() const { return n_; }
  std::uint64_t node_count() const { return word_count(n_ - 1); }
  std::uint64_t arc_count() const { return word_count(n_); }

  Word node(std::uint64_t index) const { return Word(index, n_ - 1); }
  Word arc(std::uint64_t index) const { return Word(index, n_); }
  std::uint64_t source(std::uint64_t arc) const { return arc >> 1; }
  std::uint64_t target(std::uint64_t arc) const { return arc & (node_count() - 1); }
  std::array<std::uint64_t, 2> out_arcs(std::uint64_t node) const { return {node << 1, (node << 1) | 1}; }
  std::array<std::uint64_t, 2> in_arcs(std::uint64_t node) const { return {node, node | node_count()}; }

 private:
  unsigned n_;
};

/// The invariant measure on the orbit of a periodic point. Stored as the
/// lexicographically least rotation of the primitive root of its word;
/// non-primitive input is reduced, never rejected.
class PeriodicMeasure {
 public:
  explicit PeriodicMeasure(const Word& word);
  static PeriodicMeasure parse(std::string_view text) { return PeriodicMeasure(Word::parse(text)); }

  const Word& word() const { return word_; }
  unsigned period() const { return word_.length(); }
  std::string str() const { return word_.str(); }

  /// First k symbols of sigma^i(x) where x is the periodic point word^infinity.
  Word orbit_prefix(unsigned i, unsigned k) const;
  /// pi_k: frequencies of the level-k cylinders along the orbit.
  std::vector<Rational> frequencies(unsigned k) const;

  friend bool operator==(const PeriodicMeasure&, const PeriodicMeasure&) = default;
  /// Lexicographic order of the canonical words as strings ("0" < "001" < "01").
  friend bool operator<(const PeriodicMeasure& a, const PeriodicMeasure& b) { return a.str() < b.str(); }

 private:
  Word word_;
};

/// A simple cycle of G_n, stored starting at the arc that makes its symbol
/// word the canonical rotation.
struct Cycle {
  unsigned n = 1;
  std::vector<std::uint64_t> arcs;

  unsigned length() const { return static_cast<unsigned>(arcs.size()); }
  PeriodicMeasure measure() const;
  ArcSet arc_set() const;
};

/// All simple cycles of G_n, once each, sorted by (period, canonical word).
/// Johnson-style blocking backtracking. Throws past the cap.
std::vector<Cycle> enumerate_cycles(const DeBruijnGraph& g, unsigned cap = kDefaultCycleCap);

/// Memoized enumerate_cycles for G_n; safe to call from several threads.
const std::vector<Cycle>& cycles_of(unsigned n, unsigned cap = kDefaultCycleCap);

/// Number of cycles of length 2^{n-1} (Hamiltonian cycles) in G_n, n >= 2.
std::uint64_t hamiltonian_count(unsigned n, unsigned cap = kDefaultCycleCap);
/// de Bruijn's closed form 2^{2^{n-2} - n + 1}.
mpz_class hamiltonian_formula(unsigned n);

/// Least n such that every level-(n-1) cylinder holds at most one orbit point.
unsigned recursive_complexity(const PeriodicMeasure& m);

/// B_{m,k}: the level-k cylinders meeting the orbit.
std::set<Word> basin(const PeriodicMeasure& m, unsigned k);

/// Level-(n+s) cylinders whose windows at offsets 0..s all lie in B_{m,n},
/// i.e. the intersection of sigma^{-j}(B_{m,n}) over j = 0..s.
std::set<Word> basin_preimage_intersection(const PeriodicMeasure& m, unsigned n, unsigned s);

/// Checks that the intersection above equals B_{m,n+s}. Requires m in C_n.
bool basin_intersection_check(const PeriodicMeasure& m, unsigned n, unsigned s);

}  // namespace shiftmax
