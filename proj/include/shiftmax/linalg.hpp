#pragma once

#include <optional>
#include <vector>

#include "shiftmax/rational.hpp"

namespace shiftmax {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row-echelon basis grown one vector at a time, exact over Q.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Reduces v against the basis; keeps it if independent. Returns whether it was kept.
  bool add(std::vector<Rational> v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dimension_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank by fraction-exact Gaussian elimination.
int rank(const RationalMatrix& rows);

/// Dimension of the affine hull of the points; -1 for no points. When
/// `ceiling` is given (a proven upper bound) the scan stops once it is reached.
int affine_dimension(const RationalMatrix& points, std::optional<int> ceiling = std::nullopt);

}  // namespace shiftmax
