#include "shiftmax/linalg.hpp"

namespace shiftmax {

bool EchelonBasis::add(std::vector<Rational> v) {
  if (v.size() != dimension_) throw Error("vector dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivots_[r];
    if (v[c] == 0) continue;
    Rational factor = v[c] / rows_[r][c];
    for (std::size_t j = c; j < dimension_; ++j) v[j] -= factor * rows_[r][j];
  }
  std::size_t pivot = 0;
  while (pivot < dimension_ && v[pivot] == 0) ++pivot;
  if (pivot == dimension_) return false;
  // Keep earlier rows reduced in the new pivot column so later reductions
  // can take the rows in any order.
  for (auto& row : rows_) {
    if (row[pivot] == 0) continue;
    Rational factor = row[pivot] / v[pivot];
    for (std::size_t j = 0; j < dimension_; ++j) row[j] -= factor * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

int rank(const RationalMatrix& rows) {
  if (rows.empty()) return 0;
  EchelonBasis basis(rows.front().size());
  for (const auto& r : rows) basis.add(r);
  return static_cast<int>(basis.rank());
}

int affine_dimension(const RationalMatrix& points, std::optional<int> ceiling) {
  if (points.empty()) return -1;
  EchelonBasis basis(points.front().size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (ceiling && static_cast<int>(basis.rank()) >= *ceiling) break;
    std::vector<Rational> d(points[i]);
    for (std::size_t j = 0; j < d.size(); ++j) d[j] -= points[0][j];
    basis.add(std::move(d));
  }
  return static_cast<int>(basis.rank());
}

}  // namespace shiftmax
