#pragma once

#include <cstdint>
#include <vector>

#include "shiftmax/gauge.hpp"
#include "shiftmax/rational.hpp"
#include "shiftmax/sequence.hpp"
#include "shiftmax/word.hpp"

namespace shiftmax {

/// Dense step functions are capped at this level (2^16 values).
inline constexpr unsigned kMaxStepLevel = 16;

/// A function constant on the cylinders of level n, stored as its 2^n values
/// in lexicographic order of the cylinder words.
class StepFunction {
 public:
  StepFunction() : values_{Rational(0)} {}
  StepFunction(unsigned level, std::vector<Rational> values);

  static StepFunction constant(const Rational& c, unsigned level = 0);
  /// Indicator of the cylinder [w], at level |w|.
  static StepFunction indicator(const Word& w);

  unsigned level() const { return level_; }
  const std::vector<Rational>& values() const { return values_; }

  /// Value on the cylinder containing any point with prefix x; needs |x| >= level.
  const Rational& operator()(const Word& x) const;
  const Rational& at(std::uint64_t cylinder) const { return values_[cylinder]; }

  /// The same function viewed as a step function of a higher level.
  StepFunction lift(unsigned level) const;
  Rational sup_norm() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  unsigned level_ = 0;
  std::vector<Rational> values_;
};

StepFunction operator+(const StepFunction& f, const StepFunction& g);
StepFunction operator*(const Rational& s, const StepFunction& f);

/// Haar data {c, c_w : |w| < level} of a level-n step function.
/// Coefficients are stored densely; c_w sits at offset 2^|w| - 1 + bits(w).
class HaarCoefficients {
 public:
  explicit HaarCoefficients(unsigned level = 0);
  HaarCoefficients(unsigned level, Rational mean, std::vector<Rational> coeffs);

  unsigned level() const { return level_; }
  const Rational& mean() const { return mean_; }
  Rational& mean() { return mean_; }
  const Rational& coeff(const Word& w) const;
  Rational& coeff(const Word& w);
  const std::vector<Rational>& dense() const { return coeffs_; }
  /// max over |w| = k of |c_w|.
  Rational level_max_abs(unsigned k) const;
  /// The same data padded with zero coefficients up to a higher level.
  HaarCoefficients extend(unsigned level) const;

  static std::size_t offset(const Word& w) { return (std::size_t{1} << w.length()) - 1 + w.bits(); }

  friend bool operator==(const HaarCoefficients&, const HaarCoefficients&) = default;

 private:
  unsigned level_;
  Rational mean_;
  std::vector<Rational> coeffs_;
};

/// h_w(x) = (chi_[w0](x) - chi_[w1](x)) / 2. Requires |x| > |w|.
Rational haar_eval(const Word& w, const Word& x);

/// c = integral of f; c_w = 2^{|w|+2} integral of f h_w, which equals
/// (mean of f on [w0]) - (mean of f on [w1]).
HaarCoefficients forward_transform(const StepFunction& f);
StepFunction inverse_transform(const HaarCoefficients& h);

/// A_n f. Computed both as the truncated Haar series and as cylinder means;
/// the two must agree exactly (throws std::logic_error otherwise).
StepFunction truncate(const StepFunction& f, unsigned n);

/// sup of |f(x) - f(y)| over pairs first disagreeing at position >= n.
Rational variation(const StepFunction& f, unsigned n);

/// max over n < level of var_n(f) / a_n.
Rational lipschitz_constant(const StepFunction& f, const SequenceSpec& a);

/// Controls for evaluating the weighted Haar tail series.
struct TailOptions {
  /// Maximum number of exact terms; 0 selects 3n + 8.
  unsigned horizon = 0;
  /// Exact summation stops once a term drops below 2^-precision_bits of the
  /// running sum; the rest is covered by the geometric majorant.
  unsigned precision_bits = 256;
};

/// sum over k >= from_level of (k - origin + 1) * (a_k * lip + bbar_k).
/// Exact finite part plus a power-of-two-rounded geometric majorant for the
/// remainder. Throws "tail does not certify" when the remainder is not summable.
Rational weighted_tail(const Rational& lip, const SequenceSpec& a, const GaugeSpec& gauge, unsigned from_level,
                       unsigned origin, const TailOptions& options = {});

/// delta_n = sum over k >= n of (k - n + 1) * (a_k * lip + bbar_k).
Rational tail_bound(const Rational& lip, const SequenceSpec& a, const GaugeSpec& gauge, unsigned n,
                    const TailOptions& options = {});

}  // namespace shiftmax
