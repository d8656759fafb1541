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

#include "config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace qme::app {
namespace {

void RequireKnownKeys(const YAML::Node& node, const std::string& section,
                      std::initializer_list<const char*> allowed) {
  if (!node.IsMap()) throw ConfigError(section + ": expected a mapping");
  const std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (names.count(key) == 0) throw ConfigError(section + ": unknown key '" + key + "'");
  }
}

template <typename T>
T Get(const YAML::Node& node, const char* key, const std::string& section, T fallback) {
  const YAML::Node v = node[key];
  if (!v) return fallback;
  try {
    return v.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(section + "." + key + ": bad value '" + YAML::Dump(v) + "'");
  }
}

template <typename T>
T Need(const YAML::Node& node, const char* key, const std::string& section) {
  if (!node[key]) throw ConfigError(section + "." + key + " is required");
  return Get<T>(node, key, section, T{});
}

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

MapSpec ParseMap(const YAML::Node& node) {
  if (!node) return MapSpec::identity();
  RequireKnownKeys(node, "map", {"kind", "slope", "r", "a", "b", "uniformly_continuous"});
  const std::string kind = Get<std::string>(node, "kind", "map", "identity");
  MapSpec t = MapSpec::identity();
  if (kind == "identity") {
    t = MapSpec::identity();
  } else if (kind == "doubling") {
    t = MapSpec::doubling();
  } else if (kind == "tent") {
    t = MapSpec::tent(Get<double>(node, "slope", "map", 2.0));
  } else if (kind == "logistic") {
    t = MapSpec::logistic(Get<double>(node, "r", "map", 4.0));
  } else if (kind == "shift_left") {
    t = MapSpec::shift_left();
  } else if (kind == "affine") {
    t = MapSpec::affine(Get<double>(node, "a", "map", 1.0), Get<double>(node, "b", "map", 0.0));
  } else {
    throw ConfigError("map.kind: unknown map '" + kind + "'");
  }
  if (node["uniformly_continuous"]) {
    t = t.with_uniform_continuity(Get<bool>(node, "uniformly_continuous", "map", true));
  }
  return t;
}

std::vector<std::vector<double>> ParseRows(const YAML::Node& node, const std::string& where) {
  if (!node.IsSequence()) throw ConfigError(where + ": expected a list of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : node) {
    try {
      if (row.IsSequence()) {
        rows.push_back(row.as<std::vector<double>>());
      } else {
        rows.push_back({row.as<double>()});
      }
    } catch (const YAML::Exception&) {
      throw ConfigError(where + ": bad row '" + YAML::Dump(row) + "'");
    }
  }
  return rows;
}

QuasiMetric ParseMetric(const YAML::Node& node, const std::filesystem::path& base) {
  if (!node) throw ConfigError("qmetric section is required");
  RequireKnownKeys(node, "qmetric", {"kind", "alpha", "beta", "matrix", "path"});
  const std::string kind = Need<std::string>(node, "kind", "qmetric");
  if (kind == "example1_line") return QuasiMetric::example1_line();
  if (kind == "euclidean") return QuasiMetric::euclidean();
  if (kind == "circle_arc") return QuasiMetric::circle_arc();
  if (kind == "weighted_asym") {
    return QuasiMetric::weighted_asym(Get<double>(node, "alpha", "qmetric", 1.0),
                                      Get<double>(node, "beta", "qmetric", 1.0));
  }
  if (kind == "block_prefix") return QuasiMetric::block_prefix();
  if (kind == "block_prefix_asym") return QuasiMetric::block_prefix_asym();
  if (kind == "matrix") {
    if (node["matrix"] && node["path"]) throw ConfigError("qmetric: give either matrix or path, not both");
    if (node["path"]) return load_matrix_csv(Resolve(base, Need<std::string>(node, "path", "qmetric")).string());
    if (!node["matrix"]) throw ConfigError("qmetric: matrix kind needs 'matrix' rows or a 'path'");
    const auto rows = ParseRows(node["matrix"], "qmetric.matrix");
    std::vector<double> entries;
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw ConfigError("qmetric.matrix: matrix must be square");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return QuasiMetric::matrix_backed(std::move(entries), rows.size());
  }
  throw ConfigError("qmetric.kind: unknown quasi-metric '" + kind + "'");
}

PointCloud ParseCloud(const YAML::Node& node, const QuasiMetric& metric, const std::filesystem::path& base) {
  if (!node) {
    if (metric.kind() == MetricKind::MatrixBacked) return PointCloud::indices(metric.matrix_size());
    throw ConfigError("cloud section is required");
  }
  RequireKnownKeys(node, "cloud", {"kind", "count", "lo", "hi", "alphabet", "length", "points", "path"});
  const std::string kind = Need<std::string>(node, "kind", "cloud");
  if (kind == "grid_1d") {
    return PointCloud::grid_1d(Get<double>(node, "lo", "cloud", 0.0), Get<double>(node, "hi", "cloud", 1.0),
                               Need<std::size_t>(node, "count", "cloud"));
  }
  if (kind == "circle_grid") return PointCloud::circle_grid(Need<std::size_t>(node, "count", "cloud"));
  if (kind == "symbol_blocks") {
    return PointCloud::symbol_blocks(Get<unsigned>(node, "alphabet", "cloud", 2),
                                     Need<unsigned>(node, "length", "cloud"));
  }
  if (kind == "indices") {
    const std::size_t fallback = metric.kind() == MetricKind::MatrixBacked ? metric.matrix_size() : 0;
    return PointCloud::indices(Get<std::size_t>(node, "count", "cloud", fallback));
  }
  if (kind == "points") {
    if (!node["points"]) throw ConfigError("cloud: points kind needs a 'points' list");
    return PointCloud::custom(ParseRows(node["points"], "cloud.points"));
  }
  if (kind == "csv") return load_cloud_csv(Resolve(base, Need<std::string>(node, "path", "cloud")).string());
  throw ConfigError("cloud.kind: unknown cloud '" + kind + "'");
}

std::vector<std::size_t> ParseNList(const YAML::Node& node) {
  if (!node) throw ConfigError("schedule.n is required");
  if (node.IsMap()) {
    RequireKnownKeys(node, "schedule.n", {"from", "to"});
    const auto from = Need<std::size_t>(node, "from", "schedule.n");
    const auto to = Need<std::size_t>(node, "to", "schedule.n");
    if (from < 1 || to < from) throw ConfigError("schedule.n: need 1 <= from <= to");
    std::vector<std::size_t> out;
    for (std::size_t n = from; n <= to; ++n) out.push_back(n);
    return out;
  }
  try {
    return node.as<std::vector<std::size_t>>();
  } catch (const YAML::Exception&) {
    throw ConfigError("schedule.n: expected a list of positive integers or {from, to}");
  }
}

std::vector<double> ParseEpsilonList(const YAML::Node& node) {
  if (!node) throw ConfigError("schedule.epsilon is required");
  if (node.IsMap()) {
    RequireKnownKeys(node, "schedule.epsilon", {"start", "count"});
    double eps = Need<double>(node, "start", "schedule.epsilon");
    const auto count = Need<std::size_t>(node, "count", "schedule.epsilon");
    if (count == 0) throw ConfigError("schedule.epsilon.count must be at least 1");
    std::vector<double> out;
    for (std::size_t k = 0; k < count; ++k, eps /= 2.0) out.push_back(eps);
    return out;
  }
  try {
    return node.as<std::vector<double>>();
  } catch (const YAML::Exception&) {
    throw ConfigError("schedule.epsilon: expected a list of reals or {start, count}");
  }
}

std::vector<Variant> ParseVariants(const YAML::Node& node) {
  if (!node) return {Variant::SymAnd, Variant::AsymOr};
  std::vector<std::string> names;
  try {
    names = node.as<std::vector<std::string>>();
  } catch (const YAML::Exception&) {
    throw ConfigError("variants: expected a list");
  }
  std::vector<Variant> out;
  for (const std::string& name : names) {
    Variant v;
    if (name == "SymAND") {
      v = Variant::SymAnd;
    } else if (name == "AsymOR") {
      v = Variant::AsymOr;
    } else {
      throw ConfigError("variants: unknown variant '" + name + "' (SymAND or AsymOR)");
    }
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  if (out.empty()) throw ConfigError("variants: list is empty");
  return out;
}

double Positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(what) + " must be positive");
  return v;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "both") return OutputFormat::Both;
  throw ConfigError("format must be csv, json or both (got '" + text + "')");
}

bool wants_csv(OutputFormat f) { return f != OutputFormat::Json; }
bool wants_json(OutputFormat f) { return f != OutputFormat::Csv; }

EstimateOptions RunConfig::estimate_options() const {
  EstimateOptions o;
  o.grid.solver = solver;
  o.snap = snap;
  o.n_burn = n_burn;
  o.window = window;
  o.saturation_fraction = saturation_fraction;
  o.stability_tol = stability_tol;
  return o;
}

TheoremOptions RunConfig::theorem_options() const {
  TheoremOptions o;
  o.estimate = estimate_options();
  o.estimator_tol = estimator_tol;
  return o;
}

PowerOptions RunConfig::power_options() const {
  PowerOptions o;
  o.estimate = estimate_options();
  o.power_tol_rel = power_tol_rel;
  o.power_tol_abs = power_tol_abs;
  return o;
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& err) {
    throw ConfigError(std::string("yaml: ") + err.what());
  }
  if (!root || root.IsNull()) throw ConfigError("configuration is empty");
  RequireKnownKeys(root, "config",
                   {"map", "cloud", "qmetric", "schedule", "orbits", "solver", "variants", "seed", "axioms", "fit",
                    "tolerances", "power", "output"});

  RunConfig cfg;
  try {
    cfg.map = ParseMap(root["map"]);
    cfg.metric = ParseMetric(root["qmetric"], base_dir);
    cfg.cloud = ParseCloud(root["cloud"], cfg.metric, base_dir);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& err) {
    throw ConfigError(err.what());
  }
  if (const auto dim = cfg.metric.required_dim(); dim && *dim != cfg.cloud.dim()) {
    throw ConfigError("qmetric " + cfg.metric.description() + " needs " + std::to_string(*dim) +
                      "-dimensional points, cloud has dimension " + std::to_string(cfg.cloud.dim()));
  }
  if (cfg.metric.kind() == MetricKind::MatrixBacked) {
    if (cfg.cloud.size() > cfg.metric.matrix_size()) {
      throw ConfigError("cloud has more points than the quasi-metric matrix has rows");
    }
    if (cfg.map.kind() != MapKind::Identity) {
      throw ConfigError("matrix quasi-metrics only support the identity map");
    }
  }

  const YAML::Node schedule = root["schedule"];
  if (!schedule) throw ConfigError("schedule section is required");
  RequireKnownKeys(schedule, "schedule", {"n", "epsilon"});
  cfg.n_list = ParseNList(schedule["n"]);
  cfg.epsilon_list = ParseEpsilonList(schedule["epsilon"]);
  try {
    validate_schedule(cfg.n_list, cfg.epsilon_list);
  } catch (const Error& err) {
    throw ConfigError(err.what());
  }

  if (const YAML::Node orbits = root["orbits"]) {
    RequireKnownKeys(orbits, "orbits", {"snap"});
    const std::string snap = Get<std::string>(orbits, "snap", "orbits", "exact");
    if (snap == "exact") {
      cfg.snap = SnapMode::ExactClosed;
    } else if (snap == "nearest") {
      cfg.snap = SnapMode::NearestNeighbor;
    } else {
      throw ConfigError("orbits.snap must be exact or nearest");
    }
  }
  if (const YAML::Node solver = root["solver"]) {
    RequireKnownKeys(solver, "solver", {"mode", "exact_threshold"});
    const std::string mode = Get<std::string>(solver, "mode", "solver", "auto");
    if (mode == "auto") {
      cfg.solver.mode = SolveMode::Auto;
    } else if (mode == "exact") {
      cfg.solver.mode = SolveMode::Exact;
    } else if (mode == "greedy") {
      cfg.solver.mode = SolveMode::Greedy;
    } else {
      throw ConfigError("solver.mode must be auto, exact or greedy");
    }
    cfg.solver.exact_threshold = Get<std::size_t>(solver, "exact_threshold", "solver", cfg.solver.exact_threshold);
  }
  cfg.variants = ParseVariants(root["variants"]);
  cfg.seed = Get<std::uint64_t>(root, "seed", "config", cfg.seed);
  if (const YAML::Node axioms = root["axioms"]) {
    RequireKnownKeys(axioms, "axioms", {"triple_budget"});
    cfg.triple_budget = Get<std::uint64_t>(axioms, "triple_budget", "axioms", cfg.triple_budget);
  }
  if (const YAML::Node fit = root["fit"]) {
    RequireKnownKeys(fit, "fit", {"n_burn", "window", "saturation_fraction"});
    cfg.n_burn = Get<std::size_t>(fit, "n_burn", "fit", cfg.n_burn);
    cfg.window = Get<std::size_t>(fit, "window", "fit", cfg.window);
    cfg.saturation_fraction = Get<double>(fit, "saturation_fraction", "fit", cfg.saturation_fraction);
    if (!(cfg.saturation_fraction >= 0.0 && cfg.saturation_fraction <= 1.0)) {
      throw ConfigError("fit.saturation_fraction must lie in [0, 1]");
    }
  }
  if (const YAML::Node tol = root["tolerances"]) {
    RequireKnownKeys(tol, "tolerances", {"estimator", "stability", "power_rel", "power_abs"});
    cfg.estimator_tol = Positive(Get<double>(tol, "estimator", "tolerances", cfg.estimator_tol), "tolerances.estimator");
    cfg.stability_tol = Positive(Get<double>(tol, "stability", "tolerances", cfg.stability_tol), "tolerances.stability");
    cfg.power_tol_rel = Positive(Get<double>(tol, "power_rel", "tolerances", cfg.power_tol_rel), "tolerances.power_rel");
    cfg.power_tol_abs = Positive(Get<double>(tol, "power_abs", "tolerances", cfg.power_tol_abs), "tolerances.power_abs");
  }
  if (const YAML::Node power = root["power"]) {
    RequireKnownKeys(power, "power", {"m"});
    cfg.power_m = Get<std::size_t>(power, "m", "power", cfg.power_m);
    if (cfg.power_m < 1) throw ConfigError("power.m must be at least 1");
  }
  if (const YAML::Node output = root["output"]) {
    RequireKnownKeys(output, "output", {"dir", "format"});
    if (output["dir"]) cfg.out_dir = Resolve(base_dir, Get<std::string>(output, "dir", "output", ""));
    cfg.format = parse_format(Get<std::string>(output, "format", "output", "both"));
  } else {
    cfg.out_dir = base_dir / cfg.out_dir;
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.parent_path().empty() ? "." : path.parent_path());
}

const char* const kExampleConfig = R"(# qmentropy run configuration. Keys shown commented out are optional;
# the values given are the defaults.
map:
  kind: doubling            # identity | doubling | tent | logistic | shift_left | affine
  # slope: 2.0              # tent, in (0, 2]
  # r: 4.0                  # logistic, in (0, 4]
  # a: 1.0                  # affine
  # b: 0.0                  # affine
  # uniformly_continuous: true
cloud:
  kind: circle_grid         # grid_1d | circle_grid | symbol_blocks | indices | points | csv
  count: 1024               # grid_1d, circle_grid, indices
  # lo: 0.0                 # grid_1d
  # hi: 1.0                 # grid_1d
  # alphabet: 2             # symbol_blocks
  # length: 10              # symbol_blocks
  # points: [[0.0], [0.5]]  # points
  # path: cloud.csv         # csv, one point per line
qmetric:
  kind: circle_arc          # example1_line | euclidean | circle_arc | weighted_asym
                            # | block_prefix | block_prefix_asym | matrix
  # alpha: 1.0              # weighted_asym
  # beta: 1.0               # weighted_asym
  # matrix: [[0, 1], [2, 0]]
  # path: metric.csv        # matrix file, header line "qmetric,v1,<n>"
schedule:
  n: {from: 2, to: 9}       # or a list, e.g. [1, 2, 3, 4]
  epsilon: {start: 0.125, count: 5}   # halving sequence, or a list
# orbits:
#   snap: exact             # exact | nearest
# solver:
#   mode: auto              # auto | exact | greedy
#   exact_threshold: 64     # auto mode solves clouds up to this size exactly
# variants: [SymAND, AsymOR]
# seed: 0
# axioms:
#   triple_budget: 2000000  # exhaustive below this many triples, sampled above
# fit:
#   n_burn: 2
#   window: 0               # 0 fits every n >= n_burn
#   saturation_fraction: 0.25
# tolerances:
#   estimator: 0.05
#   stability: 0.05
#   power_rel: 0.2
#   power_abs: 0.05
# power:
#   m: 2
# output:
#   dir: qme_out            # relative to this file
#   format: both            # csv | json | both
)";

}  // namespace qme::app
