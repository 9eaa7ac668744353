#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "shiftmax/gauge.hpp"
#include "shiftmax/haar.hpp"
#include "shiftmax/optimize.hpp"
#include "shiftmax/sequence.hpp"

namespace shiftmax {

/// Known bounds t_k >= max_{|w|=k} |c_w| for k = L, L+1, ... (L = head level),
/// continued geometrically with `continuation_ratio` after the last entry.
/// A ratio of 0 means the Haar data stops there.
struct ExplicitTail {
  std::vector<Rational> bounds;
  Rational continuation_ratio{0};
};

/// t_k = a_k * lip + bbar_k, the bound available for f0 + g with g in the
/// Hilbert brick of `gauge` and Lip_a(f0) <= lip.
struct AnalyticTail {
  SequenceSpec sequence = SequenceSpec::standard();
  GaugeSpec gauge;
  Rational lip{0};
};

using TailSpec = std::variant<ExplicitTail, AnalyticTail>;

/// Exact Haar data up to the head's level plus bounds on everything deeper.
struct FunctionWithTail {
  StepFunction head;
  TailSpec tail;
};

struct Certificate {
  unsigned level = 0;
  std::optional<PeriodicMeasure> maximizer;
  Rational gap;
  Rational tail;
  Rational margin;  // gap - tail
  bool certified = false;
  std::string reason;
};

enum class CertifyMode { Conservative, Sharp };

struct CertifyOptions {
  CertifyMode mode = CertifyMode::Conservative;
  unsigned cycle_cap = kDefaultCycleCap;
  TailOptions tail;
};

/// Sum over k >= n of (k - n + 1) * max_{|w|=k} |c_w(f)| as bounded by f's
/// data. Empty when the explicit tail is not summable.
std::optional<Rational> weighted_tail_sum(const FunctionWithTail& f, unsigned n, const TailOptions& options = {});

/// Decides the gap condition for a head that already equals A_n f.
Certificate certify_with_tail(const StepFunction& truncated, const Rational& tail, unsigned cycle_cap);

/// Gap criterion at level n (1 <= n <= head level): certified iff
/// gap_n(A_n f) > weighted tail. The reported maximizer is then the unique,
/// locked maximizing measure of f.
Certificate check_gap_criterion(const FunctionWithTail& f, unsigned n, const CertifyOptions& options = {});

/// Whether sum n a_n < infinity can be certified for the modulus.
bool summable(const SequenceSpec& a);

/// Certificates for n = 1..D where D is the level of the sampled data,
/// each level tested on its own. Conservative mode uses delta_n; sharp mode
/// uses the sampled coefficients below D and the analytic bound beyond.
std::vector<Certificate> certify_levels(const HaarCoefficients& sampled, const Rational& lip0,
                                        const SequenceSpec& a, const GaugeSpec& gauge,
                                        const CertifyOptions& options = {});

/// First certified level, if any level <= D certifies.
std::optional<Certificate> smallest_certifying_level(const HaarCoefficients& sampled, const Rational& lip0,
                                                     const SequenceSpec& a, const GaugeSpec& gauge,
                                                     const CertifyOptions& options = {});

/// Fraction of a box sliced by |phi| <= delta is at most 2 delta / (|L|_inf tau).
Rational slice_bound(const Rational& box_thickness, const Rational& linf_norm, const Rational& delta);

struct FailureBound {
  unsigned level = 0;
  Rational delta;      // delta_n
  Rational thickness;  // tau(Q_n) = min_{|w| < n} b_w
  bool thickness_at_deepest_level = false;
  Rational raw;        // 2^{2^n + n + 1} delta_n / tau(Q_n)
  Rational bound;      // min(raw, 1)
};

/// Upper bound on P(gap_n(A_n(f0 + g)) <= delta_n) under the brick measure.
/// Validates admissibility of the gauge up to `horizon` (0: use n).
FailureBound failure_probability_bound(unsigned n, const SequenceSpec& a, const GaugeSpec& gauge,
                                       const Rational& lip0, unsigned horizon = 0,
                                       const TailOptions& options = {});

}  // namespace shiftmax
