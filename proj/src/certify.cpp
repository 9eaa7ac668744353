#include "shiftmax/certify.hpp"

#include <algorithm>

#include "shiftmax/brick.hpp"

namespace shiftmax {

namespace {

// sum over i >= 1 of (w + i) t rho^i, for 0 <= rho < 1.
Rational geometric_weighted(const Rational& t, const Rational& rho, const Rational& w) {
  Rational one_minus = 1 - rho;
  return t * (w * rho / one_minus + rho / (one_minus * one_minus));
}

std::optional<Rational> explicit_tail_sum(const ExplicitTail& tail, unsigned head_level, unsigned n) {
  Rational sum(0);
  for (std::size_t i = 0; i < tail.bounds.size(); ++i) {
    if (tail.bounds[i] < 0) throw Error("tail bounds must be nonnegative");
    sum += Rational(static_cast<unsigned long>(head_level + i - n + 1)) * tail.bounds[i];
  }
  if (tail.continuation_ratio < 0) throw Error("tail continuation ratio must be nonnegative");
  if (tail.bounds.empty() || tail.bounds.back() == 0 || tail.continuation_ratio == 0) return sum;
  if (tail.continuation_ratio >= 1) return std::nullopt;
  const unsigned long last = head_level + tail.bounds.size() - 1;
  sum += geometric_weighted(tail.bounds.back(), tail.continuation_ratio, Rational(last - n + 1));
  return sum;
}

}  // namespace

bool summable(const SequenceSpec& a) {
  unsigned from = a.kind() == SequenceSpec::Kind::ExplicitLog2Table ? static_cast<unsigned>(a.table().size()) : 0;
  return a.ratio_sup_from(from) < 1;
}

std::optional<Rational> weighted_tail_sum(const FunctionWithTail& f, unsigned n, const TailOptions& options) {
  const unsigned level = f.head.level();
  if (n > level) throw Error("gap level exceeds the head level");
  Rational sum(0);
  if (n < level) {
    const HaarCoefficients h = forward_transform(f.head);
    for (unsigned k = n; k < level; ++k) sum += Rational(k - n + 1) * h.level_max_abs(k);
  }
  if (const auto* e = std::get_if<ExplicitTail>(&f.tail)) {
    auto rest = explicit_tail_sum(*e, level, n);
    if (!rest) return std::nullopt;
    return sum + *rest;
  }
  const auto& an = std::get<AnalyticTail>(f.tail);
  if (!summable(an.sequence)) throw Error("tail does not certify");
  return sum + weighted_tail(an.lip, an.sequence, an.gauge, level, n, options);
}

Certificate certify_with_tail(const StepFunction& truncated, const Rational& tail, unsigned cycle_cap) {
  const OptimizationResult opt = ergodic_supremum(truncated, cycle_cap);
  Certificate c;
  c.level = opt.level;
  c.maximizer = opt.maximizer;
  c.gap = opt.gap;
  c.tail = tail;
  c.margin = opt.gap - tail;
  if (opt.tie) {
    c.reason = "tie";
  } else if (c.margin > 0) {
    c.certified = true;
    c.reason = "certified";
  } else {
    c.reason = "gap does not exceed tail";
  }
  return c;
}

Certificate check_gap_criterion(const FunctionWithTail& f, unsigned n, const CertifyOptions& options) {
  if (n == 0) throw Error("gap level must be at least 1");
  if (n > f.head.level()) throw Error("gap level exceeds the head level");
  const auto tail = weighted_tail_sum(f, n, options.tail);
  const StepFunction truncated = truncate(f.head, n);
  if (!tail) {
    Certificate c = certify_with_tail(truncated, Rational(0), options.cycle_cap);
    c.tail = 0;
    c.margin = 0;
    c.certified = false;
    c.reason = "tail not summable";
    return c;
  }
  return certify_with_tail(truncated, *tail, options.cycle_cap);
}

std::vector<Certificate> certify_levels(const HaarCoefficients& sampled, const Rational& lip0, const SequenceSpec& a,
                                        const GaugeSpec& gauge, const CertifyOptions& options) {
  const unsigned depth = sampled.level();
  const StepFunction full = inverse_transform(sampled);
  std::vector<Certificate> out;
  for (unsigned n = 1; n <= depth; ++n) {
    FunctionWithTail f{options.mode == CertifyMode::Sharp ? full : truncate(full, n),
                       AnalyticTail{a, gauge, lip0}};
    out.push_back(check_gap_criterion(f, n, options));
  }
  return out;
}

std::optional<Certificate> smallest_certifying_level(const HaarCoefficients& sampled, const Rational& lip0,
                                                     const SequenceSpec& a, const GaugeSpec& gauge,
                                                     const CertifyOptions& options) {
  for (auto& c : certify_levels(sampled, lip0, a, gauge, options))
    if (c.certified) return c;
  return std::nullopt;
}

Rational slice_bound(const Rational& box_thickness, const Rational& linf_norm, const Rational& delta) {
  if (box_thickness <= 0 || linf_norm <= 0 || delta <= 0) throw Error("slice bound needs positive arguments");
  return 2 * delta / (linf_norm * box_thickness);
}

FailureBound failure_probability_bound(unsigned n, const SequenceSpec& a, const GaugeSpec& gauge,
                                       const Rational& lip0, unsigned horizon, const TailOptions& options) {
  if (n == 0) throw Error("failure bound needs n >= 1");
  const auto adm = check_admissible(gauge, a, horizon ? horizon : n);
  if (!adm.ok) {
    unsigned at = adm.ratio_violation ? *adm.ratio_violation : adm.log_violation.value_or(0);
    throw Error("gauge is not admissible at level " + std::to_string(at));
  }
  FailureBound fb;
  fb.level = n;
  fb.delta = tail_bound(lip0, a, gauge, n, options);
  for (unsigned k = 0; k < n; ++k) {
    Rational m = gauge.level_min(k, a);
    if (k == 0 || m < fb.thickness) fb.thickness = m;
  }
  if (fb.thickness <= 0) throw Error("box thickness must be positive");
  fb.thickness_at_deepest_level = gauge.level_min(n - 1, a) == fb.thickness;
  fb.raw = pow2((1L << n) + n + 1) * fb.delta / fb.thickness;
  fb.bound = fb.raw > 1 ? Rational(1) : fb.raw;
  return fb;
}

}  // namespace shiftmax
