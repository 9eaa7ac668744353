#include "shiftmax/gauge.hpp"

#include <algorithm>

namespace shiftmax {

GaugeSpec::GaugeSpec(GaugeRule rule, Rational multiplier, std::map<Word, Rational> overrides, unsigned depth,
                     GaugeConstants constants)
    : rule_(rule),
      multiplier_(std::move(multiplier)),
      overrides_(std::move(overrides)),
      depth_(depth),
      constants_(std::move(constants)) {
  if (multiplier_ < 0) throw Error("gauge multiplier must be nonnegative");
  for (const auto& [w, b] : overrides_)
    if (b <= 0) throw Error("gauge value for word \"" + w.str() + "\" must be positive");
  if (constants_.evanescence <= 0 || constants_.admissible_ratio <= 0 || constants_.linear_log <= 0)
    throw Error("gauge constants must be positive");
}

GaugeRule GaugeSpec::parse_rule(const std::string& text) {
  if (text == "2^-n*a_n" || text == "2^-n") return GaugeRule::Pow2Scaled;
  if (text == "a_n/n" || text == "n^-1*a_n" || text == "1/n") return GaugeRule::InverseLevel;
  if (text == "a_n") return GaugeRule::Sequence;
  throw Error("unknown gauge rule \"" + text + "\"");
}

std::string GaugeSpec::rule_name(GaugeRule rule) {
  switch (rule) {
    case GaugeRule::Pow2Scaled:
      return "2^-n*a_n";
    case GaugeRule::InverseLevel:
      return "a_n/n";
    case GaugeRule::Sequence:
      return "a_n";
  }
  return "?";
}

Rational GaugeSpec::rule_factor(unsigned k) const {
  switch (rule_) {
    case GaugeRule::Pow2Scaled:
      return multiplier_ * pow2(-static_cast<long>(k));
    case GaugeRule::InverseLevel:
      return multiplier_ / Rational(std::max(k, 1U));
    case GaugeRule::Sequence:
      return multiplier_;
  }
  return multiplier_;
}

Rational GaugeSpec::bound(const Word& w, const SequenceSpec& a) const {
  if (auto it = overrides_.find(w); it != overrides_.end()) return it->second;
  if (multiplier_ == 0) return Rational(0);
  return rule_factor(w.length()) * a.term(w.length());
}

unsigned GaugeSpec::override_depth() const {
  unsigned d = 0;
  for (const auto& [w, b] : overrides_) d = std::max(d, w.length() + 1);
  return d;
}

namespace {

template <class Pick>
Rational level_extreme(const GaugeSpec& g, unsigned k, const SequenceSpec& a, Pick pick) {
  Rational rule_value = g.multiplier() == 0 ? Rational(0) : g.rule_factor(k) * a.term(k);
  std::uint64_t overridden = 0;
  Rational best;
  bool have = false;
  auto lo = g.overrides().lower_bound(Word(0, k));
  for (auto it = lo; it != g.overrides().end() && it->first.length() == k; ++it) {
    ++overridden;
    if (!have || pick(it->second, best)) best = it->second, have = true;
  }
  if (overridden < word_count(k) && (!have || pick(rule_value, best))) best = rule_value, have = true;
  return best;
}

}  // namespace

Rational GaugeSpec::level_max(unsigned k, const SequenceSpec& a) const {
  return level_extreme(*this, k, a, [](const Rational& x, const Rational& y) { return x > y; });
}

Rational GaugeSpec::level_min(unsigned k, const SequenceSpec& a) const {
  return level_extreme(*this, k, a, [](const Rational& x, const Rational& y) { return x < y; });
}

}  // namespace shiftmax
