#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftmax/certify.hpp"
#include "shiftmax/gauge.hpp"
#include "shiftmax/haar.hpp"
#include "shiftmax/sequence.hpp"

namespace shiftmax {

inline constexpr unsigned kMaxSampleDepth = 12;
/// Resolution of the dyadic-uniform draw on [-b_w, b_w].
inline constexpr unsigned kSampleBits = 53;

struct EvanescenceCheck {
  bool ok = true;
  std::optional<unsigned> first_violation;
};

/// a_{n+1} / a_n <= C * 2^{-2^{n+2}} for every n < horizon.
EvanescenceCheck check_evanescent(const SequenceSpec& a, const Rational& constant, unsigned horizon);

struct AdmissibilityCheck {
  bool ok = true;
  bool ratio_ok = true;  // bbar_n / a_n <= C_adm / max(n, 1)
  bool log_ok = true;    // log2(a_n / underline-b_n) <= C_lin * max(n, 1)
  std::optional<unsigned> ratio_violation;
  std::optional<unsigned> log_violation;
  Rational admissible_ratio;
  long linear_log = 0;
};

/// Finite-horizon stand-in for bbar_n = o(a_n) and log(a_n / underline-b_n) = O(n),
/// checked for 0 <= n <= horizon with the gauge's declared constants.
AdmissibilityCheck check_admissible(const GaugeSpec& b, const SequenceSpec& a, unsigned horizon);

/// u = (2k - (2^53 - 1)) / 2^53 with k uniform on 53 bits, drawn from a
/// generator keyed by (seed, w) alone.
Rational unit_draw(std::uint64_t seed, const Word& w);

/// Seed of sample `index` in an experiment keyed by `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

struct BrickSample {
  std::uint64_t seed = 0;
  HaarCoefficients coeffs;  // mean 0; level = sampling depth D
};

/// c_w = u_w * b_w for every |w| < depth, independently and order-free.
BrickSample sample_brick(const GaugeSpec& b, const SequenceSpec& a, std::uint64_t seed,
                         std::optional<unsigned> depth = std::nullopt);

struct ExperimentConfig {
  StepFunction f0;
  std::string f0_id = "zero";
  SequenceSpec sequence = SequenceSpec::standard();
  GaugeSpec gauge;
  unsigned depth = GaugeSpec::kDefaultDepth;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  CertifyMode mode = CertifyMode::Conservative;
  unsigned cycle_cap = kDefaultCycleCap;
};

struct SampleOutcome {
  std::size_t id = 0;
  std::optional<unsigned> certified_level;
  std::string maximizer;  // at the certified level, else at depth D
  unsigned period = 0;
  Rational gap;
  Rational tail;
  std::vector<bool> certified_at;  // index n - 1
};

struct LevelStats {
  unsigned level = 0;
  std::size_t certified = 0;             // samples passing the criterion at this level
  std::size_t certified_by_level = 0;    // smallest certifying level <= this level
  std::optional<Rational> failure_rate;  // absent when N = 0
  std::optional<Rational> cumulative_rate;
  FailureBound bound;
};

struct ExperimentReport {
  ExperimentConfig config;
  Rational lip0;
  std::vector<SampleOutcome> samples;
  std::vector<LevelStats> levels;
  std::map<unsigned, std::size_t> period_histogram;  // certified samples only
  std::size_t uncertified = 0;
};

/// Monte Carlo over the Hilbert brick: each sample f0 + g is tested at every
/// level 1..D. `threads` = 0 picks hardware concurrency; results do not
/// depend on it.
ExperimentReport run_experiment(const ExperimentConfig& config, unsigned threads = 0);

/// pi_3 of a convex combination of periodic measures equals pi_3 of the
/// unbiased Bernoulli measure (all eight level-3 cylinders at 1/8).
using MeasureCombination = std::vector<std::pair<std::string, Rational>>;
MeasureCombination default_beta_combination();
bool beta_projection_decomposition_check(const MeasureCombination& combination = default_beta_combination());

}  // namespace shiftmax
