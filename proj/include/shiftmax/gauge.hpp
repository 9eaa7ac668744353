#pragma once

#include <map>
#include <string>

#include "shiftmax/rational.hpp"
#include "shiftmax/sequence.hpp"
#include "shiftmax/word.hpp"

namespace shiftmax {

/// Level rule for b_w relative to the modulus: b_w = multiplier * factor(|w|) * a_|w|.
enum class GaugeRule {
  Pow2Scaled,    // factor 2^-n
  InverseLevel,  // factor 1/max(n, 1)
  Sequence,      // factor 1 (not admissible; useful as a negative case)
};

/// User-visible constants standing in for the asymptotic O(.) / o(.) of the
/// evanescence and admissibility conditions.
struct GaugeConstants {
  Rational evanescence{1};
  Rational admissible_ratio{1};
  long linear_log = 4;
};

/// A family of positive coefficient bounds b_w indexed by words.
class GaugeSpec {
 public:
  static constexpr unsigned kDefaultDepth = 5;

  explicit GaugeSpec(GaugeRule rule = GaugeRule::Pow2Scaled, Rational multiplier = Rational(1),
                     std::map<Word, Rational> overrides = {}, unsigned depth = kDefaultDepth,
                     GaugeConstants constants = {});

  /// The degenerate all-zero gauge: an exactly known function with no tail.
  static GaugeSpec zero() { return GaugeSpec(GaugeRule::Pow2Scaled, Rational(0)); }

  /// "2^-n*a_n", "a_n/n" (or "n^-1*a_n"), "a_n".
  static GaugeRule parse_rule(const std::string& text);
  static std::string rule_name(GaugeRule rule);

  GaugeRule rule() const { return rule_; }
  const Rational& multiplier() const { return multiplier_; }
  const std::map<Word, Rational>& overrides() const { return overrides_; }
  unsigned depth() const { return depth_; }
  const GaugeConstants& constants() const { return constants_; }

  /// multiplier * factor(k); the level rule divided by a_k.
  Rational rule_factor(unsigned k) const;
  Rational bound(const Word& w, const SequenceSpec& a) const;
  /// max over |w| = k of b_w.
  Rational level_max(unsigned k, const SequenceSpec& a) const;
  /// min over |w| = k of b_w.
  Rational level_min(unsigned k, const SequenceSpec& a) const;
  /// Levels at or beyond this index follow the level rule exactly.
  unsigned override_depth() const;

 private:
  GaugeRule rule_;
  Rational multiplier_;
  std::map<Word, Rational> overrides_;
  unsigned depth_;
  GaugeConstants constants_;
};

}  // namespace shiftmax
