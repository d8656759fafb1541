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

#include "qme/serialize.hpp"

namespace qme {
namespace {

Json WitnessJson(const std::vector<PointId>& witness, std::size_t cloud_size) {
  if (cloud_size > kWitnessJsonLimit) return nullptr;
  return Json(witness);
}

}  // namespace

Json to_json(const AxiomReport& r) {
  Json j;
  j["nonnegativity_ok"] = r.nonnegativity_ok;
  j["identity_ok"] = r.identity_ok;
  j["triangle_ok"] = r.triangle_ok;
  j["symmetric"] = r.symmetric;
  j["max_asymmetry"] = r.max_asymmetry;
  j["exhaustive"] = r.exhaustive;
  j["pairs_checked"] = r.pairs_checked;
  j["triples_checked"] = r.triples_checked;
  j["violation_count"] = r.violation_count;
  Json violations = Json::array();
  for (const TriangleViolation& v : r.violations) {
    violations.push_back({{"x", v.x}, {"y", v.y}, {"z", v.z}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  j["violations"] = std::move(violations);
  return j;
}

Json to_json(const CountGrid& grid) {
  Json j;
  j["metric"] = grid.metric;
  j["cloud_size"] = grid.cloud_size;
  j["n_list"] = grid.n_list;
  j["epsilon_list"] = grid.epsilon_list;
  Json variants = Json::array();
  for (Variant v : grid.variants) variants.push_back(to_string(v));
  j["variants"] = std::move(variants);
  Json cells = Json::array();
  for (const CountCell& c : grid.cells) {
    Json cell;
    cell["n"] = c.n;
    cell["epsilon"] = c.epsilon;
    cell["variant"] = to_string(c.variant);
    cell["spanning"] = {{"cardinality", c.spanning.cardinality},
                        {"method", to_string(c.spanning.method)},
                        {"optimal", c.spanning.optimal},
                        {"nodes", c.spanning.nodes},
                        {"witness", WitnessJson(c.spanning.witness, grid.cloud_size)}};
    cell["separated"] = {{"cardinality", c.separated.cardinality},
                         {"method", to_string(c.separated.method)},
                         {"optimal", c.separated.optimal},
                         {"nodes", c.separated.nodes},
                         {"witness", WitnessJson(c.separated.witness, grid.cloud_size)}};
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  j["diagnostics"] = grid.diagnostics;
  return j;
}

Json to_json(const EntropyEstimate& est) {
  Json j;
  j["variant"] = to_string(est.variant);
  j["log_base"] = "e";
  j["extrapolated"] = est.extrapolated;
  j["extrapolated_epsilon"] = est.extrapolated_epsilon;
  j["stabilized"] = est.stabilized;
  j["all_exact"] = est.all_exact;
  Json rows = Json::array();
  for (const EpsilonSlope& row : est.per_epsilon) {
    Json r;
    r["epsilon"] = row.epsilon;
    r["resolved"] = row.resolved;
    r["slope"] = row.slope;
    r["fit_points"] = row.fit_points;
    r["residual"] = row.residual;
    r["max_increment"] = row.max_increment;
    r["spanning_resolved"] = row.spanning_resolved;
    r["spanning_slope"] = row.spanning_slope;
    rows.push_back(std::move(r));
  }
  j["per_epsilon"] = std::move(rows);
  j["diagnostics"] = est.diagnostics;
  return j;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["level"] = c.level == CheckLevel::Count ? "count" : "estimate";
  j["passed"] = c.passed;
  j["cells_checked"] = c.cells_checked;
  j["cells_skipped"] = c.cells_skipped;
  j["detail"] = c.detail;
  j["failures"] = c.failures;
  return j;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["estimates"] = {{"h_prime", to_json(r.h_prime)},
                    {"h_double_prime", to_json(r.h_double_prime)},
                    {"h_mean_metric", to_json(r.h_mean)},
                    {"h_max_metric", to_json(r.h_max)}};
  j["counts"] = to_json(r.counts);
  j["counts_mean_metric"] = to_json(r.counts_mean);
  j["counts_max_metric"] = to_json(r.counts_max);
  return j;
}

Json to_json(const PowerReport& r) {
  Json j;
  j["m"] = r.m;
  j["uc_declared"] = r.uc_declared;
  j["passed"] = r.passed();
  j["count_check"] = to_json(r.count_check);
  j["h_power"] = r.power.extrapolated;
  j["m_times_h_base"] = r.scaled_base;
  j["tolerance"] = r.tolerance;
  j["estimate_passed"] = r.estimate_passed;
  j["base_estimate"] = to_json(r.base);
  j["power_estimate"] = to_json(r.power);
  return j;
}

}  // namespace qme
