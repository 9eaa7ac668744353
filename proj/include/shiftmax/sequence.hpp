#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftmax/rational.hpp"

namespace shiftmax {

/// A modulus a = (a_n), strictly decreasing to zero, defining the ultrametric
/// d_a(x, y) = a_m with m the first disagreement of x and y.
///
/// Three families are supported:
///  - doubly exponential: a_n = 2^-e_n with e_{n+1} = e_n + 2^{n+2};
///  - geometric: a_n = theta^n, theta rational in (0, 1);
///  - explicit log2 table: a_n = 2^{t_n} for integer t_n, continued past the
///    end of the table with its last step.
class SequenceSpec {
 public:
  enum class Kind { ExplicitLog2Table, DoublyExponential, Geometric };

  static SequenceSpec doubly_exponential(long e0 = 0);
  static SequenceSpec geometric(const Rational& theta);
  static SequenceSpec explicit_log2(std::vector<long> log2_values);
  /// The evanescent default: doubly exponential with e_0 = 0.
  static SequenceSpec standard() { return doubly_exponential(0); }

  Kind kind() const { return kind_; }
  long e0() const { return e0_; }
  const Rational& theta() const { return theta_; }
  const std::vector<long>& table() const { return table_; }

  /// a_n exactly. Throws if the value would need more than ~16M bits.
  Rational term(unsigned n) const;
  /// log2(a_n) when it is an integer.
  std::optional<long> log2_term(unsigned n) const;
  /// a_{n+1} / a_n exactly.
  Rational ratio(unsigned n) const;
  std::optional<long> log2_ratio(unsigned n) const;
  /// sup over j >= k of a_{j+1} / a_j. Drives the geometric tail majorant.
  Rational ratio_sup_from(unsigned k) const;

  std::string describe() const;

 private:
  SequenceSpec() = default;

  Kind kind_ = Kind::DoublyExponential;
  long e0_ = 0;
  Rational theta_;
  std::vector<long> table_;
};

}  // namespace shiftmax
