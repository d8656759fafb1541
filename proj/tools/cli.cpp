// Copyright 2026 The qmentropy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "config.hpp"
#include "qme/parallel.hpp"
#include "qme/serialize.hpp"

namespace qme::app {
namespace {

struct Overrides {
  std::string config;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
  std::optional<std::size_t> exact_threshold;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::size_t> m;
};

std::shared_ptr<spdlog::logger> MakeLogger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto log = std::make_shared<spdlog::logger>("qme", sink);
  log->set_pattern("[%l] %v");
  log->set_level(spdlog::level::warn);
  if (const char* env = std::getenv("QME_LOG"); env != nullptr && *env != '\0') {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; only accept it when asked for
    if (level != spdlog::level::off || std::string(env) == "off") {
      log->set_level(level);
    } else {
      log->warn("QME_LOG: unknown level '{}', using warn", env);
    }
  }
  return log;
}

void AddCommonOptions(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "Run configuration (YAML)")->required();
  cmd->add_option("--out", o.out, "Output directory (overrides output.dir)");
  cmd->add_option("--threads", o.threads, "Worker threads, 0 = machine parallelism");
  cmd->add_option("--exact-threshold", o.exact_threshold, "Largest cloud solved exactly in auto mode");
  cmd->add_option("--seed", o.seed, "Seed for sampled axiom checks");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json", "both"}));
}

RunConfig Resolve(const Overrides& o) {
  RunConfig cfg = load_config(o.config);
  if (o.out) cfg.out_dir = *o.out;
  if (o.exact_threshold) cfg.solver.exact_threshold = *o.exact_threshold;
  if (o.seed) cfg.seed = *o.seed;
  if (o.format) cfg.format = parse_format(*o.format);
  if (o.m) {
    if (*o.m < 1) throw ConfigError("--m must be at least 1");
    cfg.power_m = *o.m;
  }
  return cfg;
}

Json ConfigSummary(const RunConfig& cfg) {
  Json j;
  j["map"] = cfg.map.description();
  j["uniformly_continuous"] = cfg.map.declared_uniformly_continuous();
  j["cloud"] = cfg.cloud.describe();
  j["cloud_size"] = cfg.cloud.size();
  j["qmetric"] = cfg.metric.description();
  j["n_list"] = cfg.n_list;
  j["epsilon_list"] = cfg.epsilon_list;
  Json variants = Json::array();
  for (Variant v : cfg.variants) variants.push_back(to_string(v));
  j["variants"] = std::move(variants);
  j["snap"] = cfg.snap == SnapMode::ExactClosed ? "exact" : "nearest";
  j["solver"] = cfg.solver.mode == SolveMode::Auto ? "auto" : cfg.solver.mode == SolveMode::Exact ? "exact" : "greedy";
  j["exact_threshold"] = cfg.solver.exact_threshold;
  j["seed"] = cfg.seed;
  return j;
}

class Writer {
 public:
  Writer(const RunConfig& cfg, spdlog::logger& log) : cfg_(cfg), log_(log) {
    std::filesystem::create_directories(cfg.out_dir);
  }

  void Csv(const std::string& name, const std::string& body) {
    if (wants_csv(cfg_.format)) Write(name, body);
  }
  void Document(const std::string& name, const std::string& command, Json result) {
    if (!wants_json(cfg_.format)) return;
    Json doc;
    doc["command"] = command;
    doc["config"] = ConfigSummary(cfg_);
    doc["result"] = std::move(result);
    Write(name, doc.dump(2) + "\n");
  }

 private:
  void Write(const std::string& name, const std::string& body) {
    const auto path = cfg_.out_dir / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    f << body;
    log_.info("wrote {}", path.string());
  }

  const RunConfig& cfg_;
  spdlog::logger& log_;
};

void WarnOnSnapError(const RunConfig& cfg, spdlog::logger& log) {
  if (cfg.snap != SnapMode::NearestNeighbor) return;
  const OrbitTable step = build_orbits(cfg.map, cfg.cloud, 2, cfg.snap, &cfg.metric);
  const double radius = covering_radius(cfg.metric, cfg.cloud);
  if (step.max_snap_error() > radius / 2) {
    log.warn("nearest-neighbour snap error {} exceeds half the covering radius {}", step.max_snap_error(), radius);
  }
}

void LogDiagnostics(spdlog::logger& log, const std::string& label, const std::vector<std::string>& notes) {
  for (const std::string& d : notes) log.warn("{}: {}", label, d);
}

int CmdValidate(const RunConfig& cfg, spdlog::logger& log, std::ostream& out) {
  const AxiomReport report = check_axioms(cfg.metric, cfg.cloud, cfg.triple_budget, cfg.seed);
  Writer w(cfg, log);
  std::ostringstream csv;
  csv << "x,y,z,lhs,rhs\n";
  for (const TriangleViolation& v : report.violations) {
    csv << v.x << "," << v.y << "," << v.z << "," << format_real(v.lhs) << "," << format_real(v.rhs) << "\n";
  }
  w.Csv("axioms.csv", csv.str());
  w.Document("axioms.json", "validate", to_json(report));

  out << "quasi-metric: " << cfg.metric.description() << " on " << cfg.cloud.describe() << "\n";
  out << "  nonnegativity: " << (report.nonnegativity_ok ? "ok" : "FAILED") << "\n";
  out << "  identity:      " << (report.identity_ok ? "ok" : "FAILED") << "\n";
  out << "  triangle:      " << (report.triangle_ok ? "ok" : "FAILED") << " (" << report.triples_checked
      << (report.exhaustive ? " triples, exhaustive" : " sampled triples") << ")\n";
  out << "  symmetric:     " << (report.symmetric ? "yes" : "no") << ", max asymmetry "
      << format_real(report.max_asymmetry) << "\n";
  for (const TriangleViolation& v : report.violations) {
    out << "  violation (" << v.x << "," << v.y << "," << v.z << "): " << format_real(v.lhs) << " > "
        << format_real(v.rhs) << "\n";
  }
  if (report.violation_count > report.violations.size()) {
    out << "  ... " << report.violation_count - report.violations.size() << " more violations\n";
  }
  return report.all_ok() ? kExitOk : kExitCheckFailed;
}

int CmdCounts(const RunConfig& cfg, spdlog::logger& log, std::ostream& out) {
  WarnOnSnapError(cfg, log);
  const OrbitTable orbits = build_orbits(cfg.map, cfg.cloud, cfg.n_list.back(), cfg.snap, &cfg.metric);
  CountGridOptions options;
  options.solver = cfg.solver;
  options.variants = cfg.variants;
  const CountGrid grid = count_grid(cfg.metric, orbits, cfg.n_list, cfg.epsilon_list, options);
  LogDiagnostics(log, "counts", grid.diagnostics);
  Writer w(cfg, log);
  w.Csv("counts.csv", count_grid_csv(grid));
  w.Document("counts.json", "counts", to_json(grid));

  std::size_t exact = 0;
  for (const CountCell& c : grid.cells) exact += c.exact() ? 1 : 0;
  out << grid.cells.size() << " cells (" << exact << " exact) for " << cfg.map.description() << " on "
      << cfg.cloud.describe() << "\n";
  out << "wrote " << cfg.out_dir.string() << "\n";
  return kExitOk;
}

EntropyVariant EstimateFor(Variant v) {
  return v == Variant::SymAnd ? EntropyVariant::HPrime : EntropyVariant::HDoublePrime;
}

void PrintEstimate(std::ostream& out, const EntropyEstimate& est) {
  out << "  " << to_string(est.variant) << " = " << format_real(est.extrapolated) << " at epsilon "
      << format_real(est.extrapolated_epsilon) << (est.stabilized ? "" : " (not stabilized)") << "\n";
}

int CmdEntropy(const RunConfig& cfg, spdlog::logger& log, std::ostream& out) {
  WarnOnSnapError(cfg, log);
  const DynamicalSystem system{cfg.map, cfg.cloud, cfg.metric};
  std::vector<EntropyEstimate> estimates;
  for (Variant v : cfg.variants) {
    estimates.push_back(estimate_entropy(system, EstimateFor(v), cfg.n_list, cfg.epsilon_list, cfg.estimate_options()));
    LogDiagnostics(log, to_string(estimates.back().variant), estimates.back().diagnostics);
  }
  Writer w(cfg, log);
  w.Csv("entropy.csv", entropy_csv(estimates));
  Json arr = Json::array();
  for (const EntropyEstimate& e : estimates) arr.push_back(to_json(e));
  w.Document("entropy.json", "entropy", std::move(arr));

  out << "entropy estimates for " << cfg.map.description() << " on " << cfg.cloud.describe() << ":\n";
  for (const EntropyEstimate& e : estimates) PrintEstimate(out, e);
  return kExitOk;
}

std::string ChecksCsv(const std::vector<CheckResult>& checks) {
  std::ostringstream csv;
  csv << "name,level,passed,cells_checked,cells_skipped\n";
  for (const CheckResult& c : checks) {
    csv << c.name << "," << (c.level == CheckLevel::Count ? "count" : "estimate") << ","
        << (c.passed ? "true" : "false") << "," << c.cells_checked << "," << c.cells_skipped << "\n";
  }
  return csv.str();
}

void PrintCheck(std::ostream& out, const CheckResult& c) {
  out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cells_checked << " checked";
  if (c.cells_skipped != 0) out << ", " << c.cells_skipped << " skipped";
  out << ")";
  if (!c.detail.empty()) out << ": " << c.detail;
  out << "\n";
  for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) out << "      " << c.failures[k] << "\n";
}

int CmdCompare(const RunConfig& cfg, spdlog::logger& log, std::ostream& out) {
  WarnOnSnapError(cfg, log);
  const DynamicalSystem system{cfg.map, cfg.cloud, cfg.metric};
  const TheoremReport report = compare_theorems(system, cfg.n_list, cfg.epsilon_list, cfg.theorem_options());
  Writer w(cfg, log);
  w.Csv("compare_checks.csv", ChecksCsv(report.checks));
  const std::vector<EntropyEstimate> estimates = {report.h_prime, report.h_double_prime, report.h_mean,
                                                  report.h_max};
  w.Csv("compare_entropy.csv", entropy_csv(estimates));
  w.Document("compare.json", "compare", to_json(report));

  out << "theorem checks for " << cfg.map.description() << " on " << cfg.cloud.describe() << ":\n";
  for (const CheckResult& c : report.checks) PrintCheck(out, c);
  for (const EntropyEstimate& e : estimates) PrintEstimate(out, e);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int CmdPower(const RunConfig& cfg, spdlog::logger& log, std::ostream& out) {
  if (cfg.snap != SnapMode::ExactClosed) throw Error("power: requires orbits.snap = exact");
  const PowerReport report = power_rule_check(cfg.map, cfg.power_m, cfg.cloud, cfg.metric, cfg.n_list,
                                              cfg.epsilon_list, cfg.power_options());
  Writer w(cfg, log);
  std::ostringstream csv;
  csv << "series,epsilon,slope,residual,resolved\n";
  for (const auto* est : {&report.base, &report.power}) {
    for (const EpsilonSlope& row : est->per_epsilon) {
      csv << (est == &report.base ? "base" : "power") << "," << format_real(row.epsilon) << ","
          << format_real(row.slope) << "," << format_real(row.residual) << "," << (row.resolved ? "true" : "false")
          << "\n";
    }
  }
  w.Csv("power.csv", csv.str());
  w.Document("power.json", "power", to_json(report));

  out << "power rule for " << cfg.map.description() << ", m = " << report.m << ":\n";
  PrintCheck(out, report.count_check);
  out << "  h''(T^m) = " << format_real(report.power.extrapolated) << ", m * h''(T) = "
      << format_real(report.scaled_base) << ", tolerance " << format_real(report.tolerance) << ": "
      << (report.estimate_passed ? "PASS" : "FAIL") << "\n";
  if (!report.uc_declared) {
    log.warn("map {} is not declared uniformly continuous; the power rule does not apply",
             cfg.map.description());
    out << "  WARNING: map not declared uniformly continuous\n";
    return kExitPrecondition;
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto log = MakeLogger(err);
  CLI::App app{"Topological entropy estimates on quasi-metric spaces", "qme"};
  app.require_subcommand(0, 1);
  bool example = false;
  app.add_flag("--example-config", example, "Print an annotated example configuration and exit");
  app.footer("Exit codes: 0 success, 1 check failure, 2 precondition or usage warning, 3 parse error.\n"
             "QME_LOG sets verbosity (trace, debug, info, warn, error, off; default warn).\n"
             "Run with --example-config for every configuration key and its default.");

  Overrides o;
  auto* validate = app.add_subcommand("validate", "Check the quasi-metric axioms on the configured cloud");
  auto* counts = app.add_subcommand("counts", "Spanning and separated set counts over the schedule");
  auto* entropy = app.add_subcommand("entropy", "Entropy estimates for the requested variants");
  auto* compare = app.add_subcommand("compare", "Count-level and estimate-level theorem checks");
  auto* power = app.add_subcommand("power", "Power rule h''(T^m) = m h''(T)");
  for (CLI::App* cmd : {validate, counts, entropy, compare, power}) AddCommonOptions(cmd, o);
  power->add_option("--m", o.m, "Power of the map (overrides power.m)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitOk;
    err << "qme: " << e.what() << "\n" << "run 'qme --help' for usage\n";
    return kExitPrecondition;
  }
  if (example) {
    out << kExampleConfig;
    return kExitOk;
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return kExitPrecondition;
  }

  RunConfig cfg;
  try {
    cfg = Resolve(o);
  } catch (const Error& e) {
    log->error("{}", e.what());
    return kExitParseError;
  }
  const unsigned saved_threads = max_threads();
  if (o.threads) set_max_threads(*o.threads);
  int code = kExitOk;
  try {
    if (validate->parsed()) {
      code = CmdValidate(cfg, *log, out);
    } else if (counts->parsed()) {
      code = CmdCounts(cfg, *log, out);
    } else if (entropy->parsed()) {
      code = CmdEntropy(cfg, *log, out);
    } else if (compare->parsed()) {
      code = CmdCompare(cfg, *log, out);
    } else {
      code = CmdPower(cfg, *log, out);
    }
  } catch (const std::exception& e) {
    log->error("{}", e.what());
    code = kExitPrecondition;
  }
  set_max_threads(saved_threads);
  log->flush();
  return code;
}

}  // namespace qme::app
