#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace shiftmax {

using Rational = mpq_class;

/// Thrown for every contract violation in the library. The message names the
/// failing check so the CLI can surface it verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical "p/q" form (q >= 1, always present).
std::string to_string(const Rational& r);

/// Accepts "p/q", "p", with optional leading '-'. Throws Error on anything else.
Rational parse_rational(std::string_view text);

/// 2^e exactly.
Rational pow2(long e);

/// log2(r) when r is an exact (possibly negative-exponent) power of two.
std::optional<long> exact_log2(const Rational& r);

/// Floating log2 of a positive rational. Never used for decisions, only for
/// reports; robust for magnitudes far below the double range.
double log2_approx(const Rational& r);

/// Report form of log2(r): the exact integer when r is a power of two,
/// otherwise a fixed 6-decimal approximation; "-inf" for zero.
std::string log2_string(const Rational& r);

/// Smallest power of two >= r, for r > 0.
Rational pow2_ceil(const Rational& r);

}  // namespace shiftmax
