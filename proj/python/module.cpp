#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shiftmax/io.hpp"

namespace py = pybind11;
using namespace shiftmax;
using io::json;

namespace {

StepFunction step(unsigned level, const std::vector<std::string>& values) {
  std::vector<Rational> v;
  for (const auto& s : values) v.push_back(parse_rational(s));
  return StepFunction(level, std::move(v));
}

std::vector<std::string> strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "shiftmax native core; rationals cross the boundary as \"p/q\" strings";

  py::register_exception<Error>(m, "ShiftmaxError", PyExc_ValueError);

  m.def("forward_transform", [](unsigned level, const std::vector<std::string>& values) {
    return dump(io::to_json(forward_transform(step(level, values))));
  });
  m.def("inverse_transform", [](const std::string& haar_json) {
    return strings(inverse_transform(io::haar_from(json::parse(haar_json))).values());
  });
  m.def("truncate", [](unsigned level, const std::vector<std::string>& values, unsigned n) {
    return strings(truncate(step(level, values), n).values());
  });
  m.def("variation", [](unsigned level, const std::vector<std::string>& values, unsigned n) {
    return to_string(variation(step(level, values), n));
  });

  m.def("cycles", [](unsigned n) {
    std::vector<std::string> out;
    for (const auto& c : cycles_of(n)) out.push_back(c.measure().str());
    return out;
  });
  m.def("hamiltonian_count", [](unsigned n) { return hamiltonian_count(n); });
  m.def("recursive_complexity", [](const std::string& w) { return recursive_complexity(PeriodicMeasure::parse(w)); });
  m.def("frequencies", [](const std::string& w, unsigned k) {
    return strings(PeriodicMeasure::parse(w).frequencies(k));
  });

  m.def("polytope_dimension", [](unsigned n) { return polytope_of(n).dimension(); });
  m.def("polytope_edges", [](unsigned n) {
    const auto& p = polytope_of(n);
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [i, j] : edges(p)) out.emplace_back(p.vertices()[i].measure.str(), p.vertices()[j].measure.str());
    return out;
  });
  m.def("face_census", [](unsigned n) {
    const auto& p = polytope_of(n);
    auto census = face_census(face_lattice(p), p.dimension());
    return py::make_tuple(census.by_dimension, census.facet_sizes, census.total);
  });

  m.def("ergodic_supremum", [](unsigned level, const std::vector<std::string>& values) {
    return dump(io::to_json(ergodic_supremum(step(level, values))));
  });
  m.def("karp_max_cycle_mean", [](unsigned n, const std::vector<std::string>& weights) {
    std::vector<Rational> w;
    for (const auto& s : weights) w.push_back(parse_rational(s));
    return to_string(karp_max_cycle_mean(DeBruijnGraph(n), w));
  });

  m.def("check_gap_criterion", [](const std::string& head_json, const std::string& tail_json, unsigned n) {
    FunctionWithTail f{io::step_function_from(json::parse(head_json), "head"), ExplicitTail{}};
    if (!tail_json.empty()) f.tail = io::tail_from(json::parse(tail_json));
    return dump(io::to_json(check_gap_criterion(f, n)));
  });
  m.def("check_gauge", [](const std::string& sequence_json, const std::string& gauge_json, unsigned horizon) {
    SequenceSpec a = io::sequence_from(json::parse(sequence_json));
    GaugeSpec b = io::gauge_from(json::parse(gauge_json));
    return py::make_tuple(check_evanescent(a, b.constants().evanescence, horizon).ok,
                          check_admissible(b, a, horizon).ok);
  });
  m.def(
      "run_experiment",
      [](const std::string& config_json, unsigned threads) {
        ExperimentConfig cfg = io::experiment_from(json::parse(config_json));
        py::gil_scoped_release release;
        return dump(io::to_json(run_experiment(cfg, threads)));
      },
      py::arg("config_json"), py::arg("threads") = 0);
  m.def("beta_projection_decomposition_check", [] { return beta_projection_decomposition_check(); });
}
