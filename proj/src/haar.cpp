#include "shiftmax/haar.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftmax {

StepFunction::StepFunction(unsigned level, std::vector<Rational> values) : level_(level), values_(std::move(values)) {
  if (level_ > kMaxStepLevel) throw Error("step function level exceeds " + std::to_string(kMaxStepLevel));
  if (values_.size() != word_count(level_))
    throw Error("step function of level " + std::to_string(level_) + " needs " +
                std::to_string(word_count(level_)) + " values, got " + std::to_string(values_.size()));
}

StepFunction StepFunction::constant(const Rational& c, unsigned level) {
  if (level > kMaxStepLevel) throw Error("step function level exceeds " + std::to_string(kMaxStepLevel));
  return StepFunction(level, std::vector<Rational>(word_count(level), c));
}

StepFunction StepFunction::indicator(const Word& w) {
  StepFunction f = constant(Rational(0), w.length());
  f.values_[w.bits()] = 1;
  return f;
}

const Rational& StepFunction::operator()(const Word& x) const {
  if (x.length() < level_) throw Error("insufficient depth");
  return values_[x.prefix(level_).bits()];
}

StepFunction StepFunction::lift(unsigned level) const {
  if (level < level_) throw Error("cannot lift a step function to a lower level");
  if (level > kMaxStepLevel) throw Error("step function level exceeds " + std::to_string(kMaxStepLevel));
  std::vector<Rational> out(word_count(level));
  unsigned shift = level - level_;
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = values_[i >> shift];
  return StepFunction(level, std::move(out));
}

Rational StepFunction::sup_norm() const {
  Rational m(0);
  for (const auto& v : values_) m = std::max(m, Rational(abs(v)));
  return m;
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  unsigned level = std::max(f.level(), g.level());
  StepFunction a = f.lift(level), b = g.lift(level);
  std::vector<Rational> out(a.values());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.values()[i];
  return StepFunction(level, std::move(out));
}

StepFunction operator*(const Rational& s, const StepFunction& f) {
  std::vector<Rational> out(f.values());
  for (auto& v : out) v *= s;
  return StepFunction(f.level(), std::move(out));
}

HaarCoefficients::HaarCoefficients(unsigned level)
    : level_(level), mean_(0), coeffs_(word_count(level) - 1, Rational(0)) {
  if (level_ > kMaxStepLevel) throw Error("Haar data level exceeds " + std::to_string(kMaxStepLevel));
}

HaarCoefficients::HaarCoefficients(unsigned level, Rational mean, std::vector<Rational> coeffs)
    : level_(level), mean_(std::move(mean)), coeffs_(std::move(coeffs)) {
  if (level_ > kMaxStepLevel) throw Error("Haar data level exceeds " + std::to_string(kMaxStepLevel));
  if (coeffs_.size() != word_count(level_) - 1)
    throw Error("Haar data of level " + std::to_string(level_) + " needs " +
                std::to_string(word_count(level_) - 1) + " coefficients");
}

const Rational& HaarCoefficients::coeff(const Word& w) const {
  if (w.length() >= level_) throw Error("no Haar coefficient for word \"" + w.str() + "\" at this level");
  return coeffs_[offset(w)];
}

Rational& HaarCoefficients::coeff(const Word& w) {
  if (w.length() >= level_) throw Error("no Haar coefficient for word \"" + w.str() + "\" at this level");
  return coeffs_[offset(w)];
}

Rational HaarCoefficients::level_max_abs(unsigned k) const {
  if (k >= level_) return Rational(0);
  Rational m(0);
  std::size_t base = word_count(k) - 1;
  for (std::uint64_t i = 0; i < word_count(k); ++i) m = std::max(m, Rational(abs(coeffs_[base + i])));
  return m;
}

HaarCoefficients HaarCoefficients::extend(unsigned level) const {
  if (level < level_) throw Error("cannot extend Haar data to a lower level");
  std::vector<Rational> out(word_count(level) - 1, Rational(0));
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
  return HaarCoefficients(level, mean_, std::move(out));
}

Rational haar_eval(const Word& w, const Word& x) {
  if (x.length() <= w.length()) throw Error("insufficient depth");
  if (x.prefix(w.length()) != w) return Rational(0);
  return x.at(w.length()) == 0 ? Rational(1, 2) : Rational(-1, 2);
}

HaarCoefficients forward_transform(const StepFunction& f) {
  const unsigned n = f.level();
  HaarCoefficients h(n);
  std::vector<Rational> means = f.values();
  for (unsigned j = n; j-- > 0;) {
    std::vector<Rational> coarse(word_count(j));
    for (std::uint64_t i = 0; i < coarse.size(); ++i) {
      const Rational& left = means[2 * i];
      const Rational& right = means[2 * i + 1];
      h.coeff(Word(i, j)) = left - right;
      coarse[i] = (left + right) / 2;
    }
    means = std::move(coarse);
  }
  h.mean() = means.front();
  return h;
}

StepFunction inverse_transform(const HaarCoefficients& h) {
  std::vector<Rational> values{h.mean()};
  for (unsigned j = 0; j < h.level(); ++j) {
    std::vector<Rational> fine(word_count(j + 1));
    for (std::uint64_t i = 0; i < values.size(); ++i) {
      Rational half = h.coeff(Word(i, j)) / 2;
      fine[2 * i] = values[i] + half;
      fine[2 * i + 1] = values[i] - half;
    }
    values = std::move(fine);
  }
  return StepFunction(h.level(), std::move(values));
}

StepFunction truncate(const StepFunction& f, unsigned n) {
  if (n > f.level()) throw Error("truncation level exceeds the step function's level");

  HaarCoefficients full = forward_transform(f);
  HaarCoefficients head(n);
  head.mean() = full.mean();
  for (unsigned k = 0; k < n; ++k)
    for (std::uint64_t i = 0; i < word_count(k); ++i) head.coeff(Word(i, k)) = full.coeff(Word(i, k));
  StepFunction by_series = inverse_transform(head);

  const unsigned shift = f.level() - n;
  const std::uint64_t block = word_count(shift);
  std::vector<Rational> means(word_count(n));
  for (std::uint64_t i = 0; i < means.size(); ++i) {
    Rational sum(0);
    for (std::uint64_t j = 0; j < block; ++j) sum += f.at(i * block + j);
    means[i] = sum / Rational(static_cast<unsigned long>(block));
  }
  StepFunction by_means(n, std::move(means));

  if (!(by_series == by_means)) throw std::logic_error("Haar truncation disagrees with cylinder averages");
  return by_series;
}

Rational variation(const StepFunction& f, unsigned n) {
  if (n >= f.level()) return Rational(0);
  const std::uint64_t block = word_count(f.level() - n);
  Rational worst(0);
  for (std::uint64_t start = 0; start < f.values().size(); start += block) {
    auto [lo, hi] = std::minmax_element(f.values().begin() + static_cast<std::ptrdiff_t>(start),
                                        f.values().begin() + static_cast<std::ptrdiff_t>(start + block));
    worst = std::max(worst, Rational(*hi - *lo));
  }
  return worst;
}

Rational lipschitz_constant(const StepFunction& f, const SequenceSpec& a) {
  Rational lip(0);
  for (unsigned n = 0; n < f.level(); ++n) lip = std::max(lip, Rational(variation(f, n) / a.term(n)));
  return lip;
}

Rational weighted_tail(const Rational& lip, const SequenceSpec& a, const GaugeSpec& gauge, unsigned from_level,
                       unsigned origin, const TailOptions& options) {
  if (from_level < origin) throw Error("tail must start at or after its weight origin");
  if (lip < 0) throw Error("Lipschitz constant must be nonnegative");
  const unsigned horizon = options.horizon ? options.horizon : 3 * origin + 8;
  const unsigned exact_floor = std::max(from_level, gauge.override_depth());

  auto level_term = [&](unsigned k) {
    Rational t(0);
    if (lip != 0) t += a.term(k) * lip;
    if (gauge.multiplier() != 0 || k < gauge.override_depth()) t += gauge.level_max(k, a);
    return t;
  };

  Rational sum(0);
  unsigned k = from_level;
  for (; k < std::max(from_level + horizon, exact_floor); ++k) {
    Rational term = Rational(k - origin + 1) * level_term(k);
    if (k >= exact_floor && sum > 0 && term * pow2(options.precision_bits) < sum) break;
    sum += term;
  }

  // Beyond k every level term decays at least as fast as a does.
  Rational next = level_term(k);
  if (next == 0) return sum;
  Rational rho = a.ratio_sup_from(k);
  if (rho >= 1) throw Error("tail does not certify");
  Rational weight(k - origin + 1);
  Rational one_minus = 1 - rho;
  Rational remainder = next * (weight / one_minus + rho / (one_minus * one_minus));
  if (remainder > 0) sum += pow2_ceil(remainder);
  return sum;
}

Rational tail_bound(const Rational& lip, const SequenceSpec& a, const GaugeSpec& gauge, unsigned n,
                    const TailOptions& options) {
  return weighted_tail(lip, a, gauge, n, n, options);
}

}  // namespace shiftmax
