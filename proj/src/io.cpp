#include "shiftmax/io.hpp"

#include <fstream>
#include <sstream>

namespace shiftmax::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error("field '" + field + "': " + what);
}

const json& require(const json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(field + "." + key, "missing");
  return *it;
}

long integer_from(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<long>();
}

unsigned level_from(const json& j, const std::string& field, unsigned cap) {
  long v = integer_from(j, field);
  if (v < 0 || v > static_cast<long>(cap)) fail(field, "must lie in [0, " + std::to_string(cap) + "]");
  return static_cast<unsigned>(v);
}

Word word_from(const std::string& text, const std::string& field) {
  try {
    return Word::parse(text);
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

}  // namespace

json rational_json(const Rational& r) { return to_string(r); }

json log2_json(const Rational& r) { return json{{"log2", log2_string(r)}}; }

Rational rational_from(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(field, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_object() && j.contains("log2")) {
    const json& e = j["log2"];
    if (e.is_number_integer()) return pow2(e.get<long>());
    if (e.is_string()) {
      Rational q = rational_from(e, field + ".log2");
      if (q.get_den() != 1) fail(field + ".log2", "only integer exponents are exact");
      return pow2(q.get_num().get_si());
    }
    fail(field + ".log2", "expected an integer");
  }
  fail(field, "expected a rational string \"p/q\"");
}

json to_json(const StepFunction& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(rational_json(v));
  return {{"level", f.level()}, {"values", values}};
}

json to_json(const HaarCoefficients& h) {
  json coeffs = json::object();
  for (unsigned k = 0; k < h.level(); ++k)
    for (std::uint64_t b = 0; b < word_count(k); ++b) {
      Word w(b, k);
      coeffs[w.str()] = rational_json(h.coeff(w));
    }
  return {{"level", h.level()}, {"mean", rational_json(h.mean())}, {"coeffs", coeffs}};
}

json to_json(const SequenceSpec& a) {
  switch (a.kind()) {
    case SequenceSpec::Kind::DoublyExponential:
      return {{"kind", "doubly-exponential"}, {"e0", a.e0()}};
    case SequenceSpec::Kind::Geometric:
      return {{"kind", "geometric"}, {"theta", rational_json(a.theta())}};
    case SequenceSpec::Kind::ExplicitLog2Table:
      return {{"kind", "explicit-log2"}, {"log2_values", a.table()}};
  }
  return nullptr;
}

json to_json(const GaugeSpec& b) {
  json overrides = json::object();
  for (const auto& [w, v] : b.overrides()) overrides[w.str()] = rational_json(v);
  return {{"rule", GaugeSpec::rule_name(b.rule())},
          {"multiplier", rational_json(b.multiplier())},
          {"depth", b.depth()},
          {"overrides", overrides},
          {"constants",
           {{"evanescence", rational_json(b.constants().evanescence)},
            {"admissible_ratio", rational_json(b.constants().admissible_ratio)},
            {"linear_log", b.constants().linear_log}}}};
}

json to_json(const PeriodicMeasure& m, unsigned level) {
  json freq = json::array();
  for (const auto& x : m.frequencies(level)) freq.push_back(rational_json(x));
  return {{"word", m.str()}, {"period", m.period()}, {"frequencies", freq}};
}

json to_json(const OptimizationResult& r) {
  return {{"level", r.level},
          {"ergsup", rational_json(r.ergsup)},
          {"maximizer", r.maximizer.str()},
          {"period", r.maximizer.period()},
          {"second_best", rational_json(r.second_best)},
          {"gap", rational_json(r.gap)},
          {"tie", r.tie}};
}

json to_json(const Certificate& c) {
  json out{{"level", c.level},
           {"maximizer", c.maximizer ? json(c.maximizer->str()) : json(nullptr)},
           {"period", c.maximizer ? json(c.maximizer->period()) : json(nullptr)},
           {"gap", rational_json(c.gap)},
           {"tail", rational_json(c.tail)},
           {"tail_log2", log2_string(c.tail)},
           {"margin", rational_json(c.margin)},
           {"certified", c.certified},
           {"reason", c.reason}};
  return out;
}

json to_json(const FailureBound& fb) {
  return {{"level", fb.level},
          {"delta", log2_json(fb.delta)},
          {"thickness", log2_json(fb.thickness)},
          {"thickness_at_deepest_level", fb.thickness_at_deepest_level},
          {"raw", log2_json(fb.raw)},
          {"bound", log2_json(fb.bound)}};
}

json to_json(const ExperimentReport& r) {
  const auto& c = r.config;
  json config{{"f0_id", c.f0_id},
              {"f0", to_json(c.f0)},
              {"sequence", to_json(c.sequence)},
              {"gauge", to_json(c.gauge)},
              {"depth", c.depth},
              {"samples", c.samples},
              {"seed", c.seed},
              {"mode", c.mode == CertifyMode::Sharp ? "sharp" : "conservative"},
              {"cycle_cap", c.cycle_cap}};
  json samples = json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"sample_id", s.id},
                       {"certified_level", s.certified_level ? json(*s.certified_level) : json(nullptr)},
                       {"maximizer", s.maximizer},
                       {"period", s.period},
                       {"gap", rational_json(s.gap)},
                       {"gap_log2", log2_string(s.gap)},
                       {"tail_log2", log2_string(s.tail)}});
  }
  json levels = json::array();
  for (const auto& st : r.levels) {
    json l{{"level", st.level},
           {"certified", st.certified},
           {"certified_by_level", st.certified_by_level},
           {"bound", to_json(st.bound)}};
    if (st.failure_rate) l["failure_rate"] = rational_json(*st.failure_rate);
    if (st.cumulative_rate) l["cumulative_rate"] = rational_json(*st.cumulative_rate);
    levels.push_back(std::move(l));
  }
  json histogram = json::object();
  for (const auto& [p, count] : r.period_histogram) histogram[std::to_string(p)] = count;
  return {{"config", config},      {"lip0", rational_json(r.lip0)},     {"samples", samples},
          {"levels", levels},      {"period_histogram", histogram},     {"uncertified", r.uncertified}};
}

StepFunction step_function_from(const json& j, const std::string& field) {
  if (j.is_object() && j.contains("coeffs")) return inverse_transform(haar_from(j, field));
  const unsigned level = level_from(require(j, "level", field), field + ".level", kMaxStepLevel);
  const json& values = require(j, "values", field);
  if (!values.is_array()) fail(field + ".values", "expected an array");
  if (values.size() != word_count(level))
    fail(field + ".values", "expected " + std::to_string(word_count(level)) + " entries, got " +
                                std::to_string(values.size()));
  std::vector<Rational> v;
  for (std::size_t i = 0; i < values.size(); ++i)
    v.push_back(rational_from(values[i], field + ".values[" + std::to_string(i) + "]"));
  return StepFunction(level, std::move(v));
}

HaarCoefficients haar_from(const json& j, const std::string& field) {
  const json& coeffs = require(j, "coeffs", field);
  if (!coeffs.is_object()) fail(field + ".coeffs", "expected an object keyed by words");
  unsigned level = 0;
  if (j.contains("level")) {
    level = level_from(j["level"], field + ".level", kMaxStepLevel);
  } else {
    for (const auto& [key, value] : coeffs.items())
      level = std::max(level, word_from(key, field + ".coeffs").length() + 1);
  }
  HaarCoefficients h(level);
  if (j.contains("mean")) h.mean() = rational_from(j["mean"], field + ".mean");
  for (const auto& [key, value] : coeffs.items()) {
    Word w = word_from(key, field + ".coeffs");
    if (w.length() >= level) fail(field + ".coeffs." + key, "word is too long for level " + std::to_string(level));
    h.coeff(w) = rational_from(value, field + ".coeffs." + key);
  }
  return h;
}

SequenceSpec sequence_from(const json& j, const std::string& field) {
  if (j.is_string()) {
    if (j == "default" || j == "doubly-exponential") return SequenceSpec::standard();
    fail(field, "unknown sequence \"" + j.get<std::string>() + "\"");
  }
  const json& kind = require(j, "kind", field);
  if (!kind.is_string()) fail(field + ".kind", "expected a string");
  try {
    if (kind == "doubly-exponential")
      return SequenceSpec::doubly_exponential(j.contains("e0") ? integer_from(j["e0"], field + ".e0") : 0);
    if (kind == "geometric") return SequenceSpec::geometric(rational_from(require(j, "theta", field), field + ".theta"));
    if (kind == "explicit-log2") {
      const json& t = require(j, "log2_values", field);
      if (!t.is_array()) fail(field + ".log2_values", "expected an array");
      std::vector<long> values;
      for (std::size_t i = 0; i < t.size(); ++i)
        values.push_back(integer_from(t[i], field + ".log2_values[" + std::to_string(i) + "]"));
      return SequenceSpec::explicit_log2(std::move(values));
    }
  } catch (const Error& e) {
    const std::string msg = e.what();
    if (msg.rfind("field '", 0) == 0) throw;
    fail(field, msg);
  }
  fail(field + ".kind", "unknown kind \"" + kind.get<std::string>() + "\"");
}

GaugeSpec gauge_from(const json& j, const std::string& field) {
  try {
    if (j.is_string()) return GaugeSpec(GaugeSpec::parse_rule(j.get<std::string>()));
    if (!j.is_object()) fail(field, "expected a rule string or an object");
    GaugeRule rule = GaugeRule::Pow2Scaled;
    if (j.contains("rule")) {
      if (!j["rule"].is_string()) fail(field + ".rule", "expected a string");
      rule = GaugeSpec::parse_rule(j["rule"].get<std::string>());
    }
    Rational multiplier(1);
    if (j.contains("multiplier")) multiplier = rational_from(j["multiplier"], field + ".multiplier");
    unsigned depth = GaugeSpec::kDefaultDepth;
    if (j.contains("depth")) depth = level_from(j["depth"], field + ".depth", kMaxSampleDepth);
    std::map<Word, Rational> overrides;
    if (j.contains("overrides")) {
      if (!j["overrides"].is_object()) fail(field + ".overrides", "expected an object keyed by words");
      for (const auto& [key, value] : j["overrides"].items())
        overrides[word_from(key, field + ".overrides")] = rational_from(value, field + ".overrides." + key);
    }
    GaugeConstants constants;
    if (j.contains("constants")) {
      const json& c = j["constants"];
      const std::string cf = field + ".constants";
      if (c.contains("evanescence")) constants.evanescence = rational_from(c["evanescence"], cf + ".evanescence");
      if (c.contains("admissible_ratio"))
        constants.admissible_ratio = rational_from(c["admissible_ratio"], cf + ".admissible_ratio");
      if (c.contains("linear_log")) constants.linear_log = integer_from(c["linear_log"], cf + ".linear_log");
    }
    return GaugeSpec(rule, multiplier, std::move(overrides), depth, constants);
  } catch (const Error& e) {
    const std::string msg = e.what();
    if (msg.rfind("field '", 0) == 0) throw;
    fail(field, msg);
  }
}

TailSpec tail_from(const json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  if (j.contains("bounds")) {
    ExplicitTail t;
    const json& b = j["bounds"];
    if (!b.is_array()) fail(field + ".bounds", "expected an array");
    for (std::size_t i = 0; i < b.size(); ++i)
      t.bounds.push_back(rational_from(b[i], field + ".bounds[" + std::to_string(i) + "]"));
    if (j.contains("continuation_ratio"))
      t.continuation_ratio = rational_from(j["continuation_ratio"], field + ".continuation_ratio");
    return t;
  }
  AnalyticTail t;
  if (j.contains("sequence")) t.sequence = sequence_from(j["sequence"], field + ".sequence");
  t.gauge = j.contains("gauge") ? gauge_from(j["gauge"], field + ".gauge") : GaugeSpec::zero();
  if (j.contains("lip")) t.lip = rational_from(j["lip"], field + ".lip");
  if (t.lip < 0) fail(field + ".lip", "must be nonnegative");
  return t;
}

ExperimentConfig experiment_from(const json& j) {
  if (!j.is_object()) fail("config", "expected an object");
  ExperimentConfig c;
  if (j.contains("sequence")) c.sequence = sequence_from(j["sequence"], "sequence");
  if (j.contains("gauge")) c.gauge = gauge_from(j["gauge"], "gauge");
  c.depth = j.contains("depth") ? level_from(j["depth"], "depth", kMaxSampleDepth) : c.gauge.depth();
  if (j.contains("samples")) {
    long n = integer_from(j["samples"], "samples");
    if (n < 0) fail("samples", "must be nonnegative");
    c.samples = static_cast<std::size_t>(n);
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) fail("seed", "expected an integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("mode")) {
    if (j["mode"] == "conservative")
      c.mode = CertifyMode::Conservative;
    else if (j["mode"] == "sharp")
      c.mode = CertifyMode::Sharp;
    else
      fail("mode", "expected \"conservative\" or \"sharp\"");
  }
  if (j.contains("f0")) {
    const json& f = j["f0"];
    if (f.is_string()) {
      if (f != "zero") fail("f0", "unknown reference \"" + f.get<std::string>() + "\"");
    } else if (f.is_object() && f.contains("function")) {
      c.f0 = step_function_from(f["function"], "f0.function");
      c.f0_id = f.contains("id") && f["id"].is_string() ? f["id"].get<std::string>() : "custom";
    } else {
      c.f0 = step_function_from(f, "f0");
      c.f0_id = "custom";
    }
  }
  return c;
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string experiment_csv(const ExperimentReport& r) {
  std::string out = "sample_id,certified_level,maximizer_word,period,gap_log2,tail_log2\n";
  for (const auto& s : r.samples) {
    out += std::to_string(s.id) + "," + (s.certified_level ? std::to_string(*s.certified_level) : "") + "," +
           s.maximizer + "," + std::to_string(s.period) + "," + log2_string(s.gap) + "," + log2_string(s.tail) + "\n";
  }
  return out;
}

}  // namespace shiftmax::io
