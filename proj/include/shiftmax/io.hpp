#pragma once

#include <json.hpp>

#include <string>

#include "shiftmax/brick.hpp"
#include "shiftmax/certify.hpp"
#include "shiftmax/debruijn.hpp"
#include "shiftmax/gauge.hpp"
#include "shiftmax/haar.hpp"
#include "shiftmax/optimize.hpp"
#include "shiftmax/polytope.hpp"
#include "shiftmax/sequence.hpp"

// JSON shapes. Rationals are "p/q" strings; magnitudes that only matter on a
// log scale are written as {"log2": "..."} next to their exact value.
namespace shiftmax::io {

using nlohmann::json;

json rational_json(const Rational& r);
json log2_json(const Rational& r);
/// Accepts "p/q", "p", an integer, or {"log2": k} (k an integer).
Rational rational_from(const json& j, const std::string& field);

json to_json(const StepFunction& f);
json to_json(const HaarCoefficients& h);
json to_json(const SequenceSpec& a);
json to_json(const GaugeSpec& b);
json to_json(const PeriodicMeasure& m, unsigned level);
json to_json(const OptimizationResult& r);
json to_json(const Certificate& c);
json to_json(const FailureBound& fb);
json to_json(const ExperimentReport& r);

/// {"level", "values"} or {"level", "mean", "coeffs"} (Haar form).
StepFunction step_function_from(const json& j, const std::string& field = "function");
HaarCoefficients haar_from(const json& j, const std::string& field = "haar");
/// "default", or {"kind": "doubly-exponential", "e0": k} | {"kind": "geometric", "theta": "p/q"} |
/// {"kind": "explicit-log2", "log2_values": [...]}.
SequenceSpec sequence_from(const json& j, const std::string& field = "sequence");
/// A rule string, or {"rule", "multiplier", "depth", "overrides": {word: value}, "constants": {...}}.
GaugeSpec gauge_from(const json& j, const std::string& field = "gauge");
/// {"bounds": [...], "continuation_ratio": ...} or {"sequence", "gauge", "lip"}.
TailSpec tail_from(const json& j, const std::string& field = "tail");
ExperimentConfig experiment_from(const json& j);

/// Parses text, reporting malformed JSON with its line and column.
json parse(const std::string& text, const std::string& source);
json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// sample_id,certified_level,maximizer_word,period,gap_log2,tail_log2
std::string experiment_csv(const ExperimentReport& r);

}  // namespace shiftmax::io
