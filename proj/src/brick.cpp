#include "shiftmax/brick.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <random>
#include <thread>

namespace shiftmax {

EvanescenceCheck check_evanescent(const SequenceSpec& a, const Rational& constant, unsigned horizon) {
  if (horizon == 0) throw Error("evanescence horizon must be at least 1");
  if (constant <= 0) throw Error("evanescence constant must be positive");
  const auto log_c = exact_log2(constant);
  EvanescenceCheck out;
  for (unsigned n = 1; n <= horizon; ++n) {
    const long budget = 1L << std::min(n + 2, 40U);
    bool ok;
    if (auto lr = a.log2_ratio(n); lr && log_c)
      ok = *lr <= *log_c - budget;
    else
      ok = a.ratio(n) <= constant * pow2(-budget);
    if (!ok) {
      out.ok = false;
      out.first_violation = n;
      return out;
    }
  }
  return out;
}

AdmissibilityCheck check_admissible(const GaugeSpec& b, const SequenceSpec& a, unsigned horizon) {
  AdmissibilityCheck out;
  out.admissible_ratio = b.constants().admissible_ratio;
  out.linear_log = b.constants().linear_log;
  for (unsigned n = 0; n <= horizon; ++n) {
    const Rational an = a.term(n);
    const Rational scale(std::max(n, 1U));
    if (!out.ratio_violation && b.level_max(n, a) * scale > out.admissible_ratio * an) out.ratio_violation = n;
    if (!out.log_violation) {
      const Rational lo = b.level_min(n, a);
      if (lo <= 0 || an > lo * pow2(out.linear_log * static_cast<long>(std::max(n, 1U)))) out.log_violation = n;
    }
  }
  out.ratio_ok = !out.ratio_violation;
  out.log_ok = !out.log_violation;
  out.ok = out.ratio_ok && out.log_ok;
  return out;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t{out[0]} << 32) | out[1];
}

Rational unit_draw(std::uint64_t seed, const Word& w) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(w.length()), static_cast<std::uint32_t>(w.bits()),
                    static_cast<std::uint32_t>(w.bits() >> 32)};
  std::mt19937_64 gen(seq);
  const std::uint64_t k = gen() >> (64 - kSampleBits);
  mpz_class num(static_cast<unsigned long>(k));
  num *= 2;
  num -= (mpz_class(1) << kSampleBits) - 1;
  Rational u(num, mpz_class(1) << kSampleBits);
  u.canonicalize();
  return u;
}

BrickSample sample_brick(const GaugeSpec& b, const SequenceSpec& a, std::uint64_t seed,
                         std::optional<unsigned> depth) {
  const unsigned d = depth.value_or(b.depth());
  if (d > kMaxSampleDepth) throw Error("sampling depth exceeds " + std::to_string(kMaxSampleDepth));
  BrickSample s{seed, HaarCoefficients(d)};
  for (unsigned k = 0; k < d; ++k) {
    for (std::uint64_t bits = 0; bits < word_count(k); ++bits) {
      const Word w(bits, k);
      const Rational bw = b.bound(w, a);
      s.coeffs.coeff(w) = bw == 0 ? Rational(0) : unit_draw(seed, w) * bw;
    }
  }
  return s;
}

namespace {

void validate(const ExperimentConfig& c) {
  if (c.depth == 0) throw Error("sampling depth must be at least 1");
  if (c.depth > kMaxSampleDepth) throw Error("sampling depth exceeds " + std::to_string(kMaxSampleDepth));
  if (c.depth > c.cycle_cap) throw Error("sampling depth exceeds the level cap " + std::to_string(c.cycle_cap));
  auto eva = check_evanescent(c.sequence, c.gauge.constants().evanescence, c.depth);
  if (!eva.ok) throw Error("sequence is not evanescent at n = " + std::to_string(*eva.first_violation));
  auto adm = check_admissible(c.gauge, c.sequence, c.depth);
  if (adm.ratio_violation)
    throw Error("gauge is not admissible: bbar_n/a_n bound fails at n = " + std::to_string(*adm.ratio_violation));
  if (adm.log_violation)
    throw Error("gauge is not admissible: log2(a_n/b_n) bound fails at n = " + std::to_string(*adm.log_violation));
  if (!summable(c.sequence)) throw Error("tail does not certify");
}

// Haar data of f0 seen at level `depth`; deeper structure of f0 is left to the Lipschitz tail.
HaarCoefficients base_coefficients(const StepFunction& f0, unsigned depth) {
  const StepFunction g = f0.level() <= depth ? f0.lift(depth) : truncate(f0, depth);
  return forward_transform(g);
}

SampleOutcome run_sample(const ExperimentConfig& c, const HaarCoefficients& base, const Rational& lip0,
                         std::size_t id) {
  BrickSample s = sample_brick(c.gauge, c.sequence, sample_seed(c.seed, id), c.depth);
  HaarCoefficients h = base;
  for (std::size_t i = 0; i < h.dense().size(); ++i) {
    const unsigned k = static_cast<unsigned>(std::bit_width(i + 1) - 1);
    const Word w(i + 1 - (std::size_t{1} << k), k);
    h.coeff(w) += s.coeffs.coeff(w);
  }

  CertifyOptions opts;
  opts.mode = c.mode;
  opts.cycle_cap = c.cycle_cap;
  auto certs = certify_levels(h, lip0, c.sequence, c.gauge, opts);

  SampleOutcome out;
  out.id = id;
  const Certificate* chosen = &certs.back();
  for (const auto& cert : certs) {
    out.certified_at.push_back(cert.certified);
    if (cert.certified && !out.certified_level) {
      out.certified_level = cert.level;
      chosen = &cert;
    }
  }
  out.maximizer = chosen->maximizer->str();
  out.period = chosen->maximizer->period();
  out.gap = chosen->gap;
  out.tail = chosen->tail;
  return out;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, unsigned threads) {
  validate(config);
  ExperimentReport report;
  report.config = config;
  report.lip0 = lipschitz_constant(config.f0, config.sequence);
  const HaarCoefficients base = base_coefficients(config.f0, config.depth);

  // Warm the shared caches before fanning out.
  for (unsigned n = 1; n <= config.depth; ++n) polytope_of(n, config.cycle_cap);

  const std::size_t total = config.samples;
  report.samples.resize(total);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i; !failed && (i = next.fetch_add(1)) < total;) {
      try {
        report.samples[i] = run_sample(config, base, report.lip0, i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (unsigned n = 1; n <= config.depth; ++n) {
    LevelStats st;
    st.level = n;
    for (const auto& s : report.samples) {
      if (s.certified_at[n - 1]) ++st.certified;
      if (s.certified_level && *s.certified_level <= n) ++st.certified_by_level;
    }
    if (total > 0) {
      st.failure_rate = Rational(static_cast<unsigned long>(total - st.certified), static_cast<unsigned long>(total));
      st.cumulative_rate =
          Rational(static_cast<unsigned long>(st.certified_by_level), static_cast<unsigned long>(total));
      st.failure_rate->canonicalize();
      st.cumulative_rate->canonicalize();
    }
    st.bound = failure_probability_bound(n, config.sequence, config.gauge, report.lip0, config.depth);
    report.levels.push_back(std::move(st));
  }
  for (const auto& s : report.samples) {
    if (s.certified_level)
      ++report.period_histogram[s.period];
    else
      ++report.uncertified;
  }
  return report;
}

MeasureCombination default_beta_combination() {
  return {{"0", Rational(1, 8)}, {"1", Rational(1, 8)}, {"001", Rational(3, 8)}, {"011", Rational(3, 8)}};
}

bool beta_projection_decomposition_check(const MeasureCombination& combination) {
  std::vector<Rational> pi(word_count(3));
  for (const auto& [word, weight] : combination) {
    auto f = PeriodicMeasure::parse(word).frequencies(3);
    for (std::size_t i = 0; i < pi.size(); ++i) pi[i] += weight * f[i];
  }
  return std::all_of(pi.begin(), pi.end(), [](const Rational& x) { return x == Rational(1, 8); });
}

}  // namespace shiftmax
