#include "shiftmax/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "shiftmax/io.hpp"

namespace shiftmax::cli {

using io::json;

unsigned level_cap() {
  const char* env = std::getenv("SHIFTMAX_MAX_LEVEL");
  if (!env || !*env) return kDefaultCycleCap;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v < 1 || v > kMaxGraphLevel)
    throw Error("SHIFTMAX_MAX_LEVEL must be an integer in [1, " + std::to_string(kMaxGraphLevel) + "]");
  return static_cast<unsigned>(v);
}

namespace {

unsigned require_level(const std::optional<unsigned>& n, const std::string& flag, unsigned cap) {
  if (!n) throw Error(flag + " is required");
  if (*n < 1 || *n > cap) throw Error(flag + " must lie in [1, " + std::to_string(cap) + "]");
  return *n;
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty())
    out << text;
  else
    io::write_file(path, text);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

SequenceSpec sequence_arg(const std::string& text) {
  if (ends_with(text, ".json")) return io::sequence_from(io::read_file(text), "--a");
  if (text == "default" || text == "doubly-exponential") return SequenceSpec::standard();
  if (text.rfind("geometric:", 0) == 0) return SequenceSpec::geometric(parse_rational(text.substr(10)));
  if (text.rfind("log2:", 0) == 0) {
    std::vector<long> values;
    std::stringstream ss(text.substr(5));
    for (std::string item; std::getline(ss, item, ',');) {
      Rational q = parse_rational(item);
      if (q.get_den() != 1) throw Error("--a: log2 values must be integers");
      values.push_back(q.get_num().get_si());
    }
    return SequenceSpec::explicit_log2(std::move(values));
  }
  throw Error("--a: expected default, geometric:p/q, log2:t0,t1,... or a .json file");
}

GaugeSpec gauge_arg(const std::string& text) {
  if (ends_with(text, ".json")) return io::gauge_from(io::read_file(text), "--b");
  return GaugeSpec(GaugeSpec::parse_rule(text));
}

int cmd_graph(const CliConfig& c, std::ostream& out) {
  const unsigned cap = level_cap();
  const unsigned n = require_level(c.n, "--n", cap);
  DeBruijnGraph g(n);
  const auto& cycles = cycles_of(n, cap);
  json list = json::array();
  for (const auto& cy : cycles) list.push_back(io::to_json(cy.measure(), n));
  json j{{"n", n}, {"nodes", g.node_count()}, {"arcs", g.arc_count()}, {"cycle_count", cycles.size()},
         {"cycles", list}};
  if (n >= 2) j["hamiltonian_count"] = hamiltonian_count(n, cap);
  emit(j, c.emit.empty() ? c.out : c.emit, out);
  return kExitOk;
}

int cmd_polytope(const CliConfig& c, std::ostream& out) {
  const unsigned cap = level_cap();
  const unsigned n = require_level(c.n, "--n", cap);
  if (c.faces && n > kMaxFaceLevel) throw Error("face enumeration capped");
  const RotationPolytope& p = polytope_of(n, cap);
  json vertices = json::array();
  for (const auto& v : p.vertices()) vertices.push_back(io::to_json(v.measure, n));
  json j{{"n", n}, {"dimension", p.dimension()}, {"vertex_count", p.size()}, {"vertices", vertices}};
  // All-pairs edge tests are quadratic in |C_n| with a linear scan each; n = 6 is out of reach.
  if (n <= 5) {
    json e = json::array();
    for (auto [i, k] : edges(p)) e.push_back({i, k});
    j["edge_count"] = e.size();
    j["edges"] = e;
  } else {
    j["edges"] = nullptr;
  }
  if (c.faces) {
    auto faces = face_lattice(p);
    auto census = face_census(faces, p.dimension());
    json by_dim = json::object();
    for (std::size_t d = 0; d < census.by_dimension.size(); ++d)
      by_dim[std::to_string(static_cast<int>(d) - 1)] = census.by_dimension[d];
    json facets = json::object();
    for (auto [size, count] : census.facet_sizes) facets[std::to_string(size)] = count;
    json list = json::array();
    for (const auto& f : faces) {
      json words = json::array();
      for (auto v : f.vertices) words.push_back(p.vertices()[v].measure.str());
      list.push_back({{"dim", f.dim}, {"vertices", words}});
    }
    j["faces"] = {{"census", {{"by_dimension", by_dim}, {"facet_sizes", facets}, {"total", census.total}}},
                  {"list", list}};
  }
  emit(j, c.emit.empty() ? c.out : c.emit, out);
  return kExitOk;
}

int cmd_optimize(const CliConfig& c, std::ostream& out) {
  if (c.function.empty()) throw Error("--function is required");
  const unsigned cap = level_cap();
  StepFunction f = io::step_function_from(io::read_file(c.function), "function");
  if (f.level() > cap) throw Error("function level exceeds the level cap " + std::to_string(cap));
  auto r = ergodic_supremum(f, cap);
  json j = io::to_json(r);
  const StepFunction g = f.lift(r.level);
  j["karp_ergsup"] = io::rational_json(karp_max_cycle_mean(DeBruijnGraph(r.level), g.values()));
  emit(j, c.out, out);
  return kExitOk;
}

int cmd_certify(const CliConfig& c, std::ostream& out) {
  if (c.head.empty()) throw Error("--head is required");
  const unsigned cap = level_cap();
  FunctionWithTail f{io::step_function_from(io::read_file(c.head), "head"), ExplicitTail{}};
  if (!c.gauge.empty()) f.tail = io::tail_from(io::read_file(c.gauge), "gauge");
  if (f.head.level() == 0) f.head = f.head.lift(1);
  unsigned top = std::min(f.head.level(), cap);
  if (c.max_level) {
    if (*c.max_level < 1) throw Error("--max-level must be at least 1");
    top = std::min(top, *c.max_level);
  }
  CertifyOptions opts;
  opts.cycle_cap = cap;
  json levels = json::array();
  std::optional<Certificate> chosen;
  for (unsigned n = 1; n <= top; ++n) {
    Certificate cert = check_gap_criterion(f, n, opts);
    levels.push_back(io::to_json(cert));
    if (!chosen || !chosen->certified) chosen = cert;
  }
  json j = io::to_json(*chosen);
  j["levels"] = levels;
  emit(j, c.out, out);
  return kExitOk;
}

int cmd_experiment(const CliConfig& c, std::ostream& out) {
  if (c.config.empty()) throw Error("--config is required");
  ExperimentConfig cfg = io::experiment_from(io::read_file(c.config));
  if (c.samples) cfg.samples = *c.samples;
  if (c.seed) cfg.seed = *c.seed;
  if (c.depth) cfg.depth = *c.depth;
  if (!c.mode.empty()) {
    if (c.mode == "sharp")
      cfg.mode = CertifyMode::Sharp;
    else if (c.mode == "conservative")
      cfg.mode = CertifyMode::Conservative;
    else
      throw Error("--mode must be conservative or sharp");
  }
  cfg.cycle_cap = level_cap();
  auto report = run_experiment(cfg, c.threads);
  emit(io::to_json(report), c.out, out);
  if (!c.csv.empty()) io::write_file(c.csv, io::experiment_csv(report));
  return kExitOk;
}

int cmd_check_gauge(const CliConfig& c, std::ostream& out) {
  SequenceSpec a = sequence_arg(c.a);
  GaugeSpec b = gauge_arg(c.b);
  const unsigned horizon = c.horizon.value_or(b.depth());
  if (horizon < 1) throw Error("--horizon must be at least 1");
  auto eva = check_evanescent(a, b.constants().evanescence, horizon);
  auto adm = check_admissible(b, a, horizon);
  out << "evanescent: " << (eva.ok ? "true" : "false") << ", admissible: " << (adm.ok ? "true" : "false") << "\n";
  auto opt = [](const std::optional<unsigned>& v) { return v ? json(*v) : json(nullptr); };
  json j{{"sequence", io::to_json(a)},
         {"gauge", io::to_json(b)},
         {"horizon", horizon},
         {"evanescent", eva.ok},
         {"evanescence_violation", opt(eva.first_violation)},
         {"admissible", adm.ok},
         {"ratio_violation", opt(adm.ratio_violation)},
         {"log_violation", opt(adm.log_violation)},
         {"admissible_ratio", io::rational_json(adm.admissible_ratio)},
         {"linear_log", adm.linear_log}};
  if (!c.out.empty()) io::write_file(c.out, j.dump(2) + "\n");
  return eva.ok && adm.ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "graph") return cmd_graph(config, out);
    if (config.subcommand == "polytope") return cmd_polytope(config, out);
    if (config.subcommand == "optimize") return cmd_optimize(config, out);
    if (config.subcommand == "certify") return cmd_certify(config, out);
    if (config.subcommand == "experiment") return cmd_experiment(config, out);
    if (config.subcommand == "check-gauge") return cmd_check_gauge(config, out);
    err << "error: unknown subcommand \"" << config.subcommand << "\"\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"Ergodic optimization for the binary shift", "shiftmax"};
  app.require_subcommand(1);

  auto* graph = app.add_subcommand("graph", "de Bruijn graph G_n and its simple cycles");
  graph->add_option("--n", c.n, "level n");
  graph->add_option("--emit", c.emit, "write JSON here instead of stdout");

  auto* polytope = app.add_subcommand("polytope", "rotation polytope R_n");
  polytope->add_option("--n", c.n, "level n");
  polytope->add_flag("--faces", c.faces, "include the face lattice (n <= 4)");
  polytope->add_option("--emit", c.emit, "write JSON here instead of stdout");

  auto* optimize = app.add_subcommand("optimize", "ergodic supremum and n-gap of a step function");
  optimize->add_option("--function", c.function, "step function JSON");

  auto* certify = app.add_subcommand("certify", "gap criterion certificate");
  certify->add_option("--head", c.head, "exact head (step function or Haar JSON)");
  certify->add_option("--gauge", c.gauge, "tail bounds JSON (explicit bounds or sequence + gauge + lip)");
  certify->add_option("--max-level", c.max_level, "highest level tested");

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo certification over a Hilbert brick");
  experiment->add_option("--config", c.config, "experiment config JSON");
  experiment->add_option("--samples", c.samples, "number of samples N");
  experiment->add_option("--depth", c.depth, "sampling depth D");
  experiment->add_option("--mode", c.mode, "conservative or sharp");
  experiment->add_option("--threads", c.threads, "worker threads (0 = all cores)");
  experiment->add_option("--csv", c.csv, "per-sample CSV output");

  auto* check = app.add_subcommand("check-gauge", "evanescence and admissibility checks");
  check->add_option("--a", c.a, "sequence: default, geometric:p/q, log2:t0,t1,... or .json");
  check->add_option("--b", c.b, "gauge rule (2^-n*a_n, a_n/n, a_n) or .json");
  check->add_option("--horizon", c.horizon, "levels checked (default: gauge depth)");

  for (auto* sub : {graph, polytope, optimize, certify, experiment, check}) {
    sub->add_option("--seed", c.seed, "random seed (default 0)");
    sub->add_option("--out", c.out, "output file");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  return dispatch(c, out, err);
}

}  // namespace shiftmax::cli
