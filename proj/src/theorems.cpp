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

#include "qme/theorems.hpp"

#include <algorithm>
#include <cmath>

namespace qme {
namespace {

CountGrid Restrict(const CountGrid& grid, std::span<const std::size_t> n_list,
                   std::span<const double> epsilon_list) {
  CountGrid out;
  out.n_list.assign(n_list.begin(), n_list.end());
  out.epsilon_list.assign(epsilon_list.begin(), epsilon_list.end());
  out.variants = grid.variants;
  out.cloud_size = grid.cloud_size;
  out.metric = grid.metric;
  for (std::size_t n : n_list) {
    for (double eps : epsilon_list) {
      for (Variant v : grid.variants) out.cells.push_back(grid.at(n, eps, v));
    }
  }
  return out;
}

std::string Cell(std::size_t n, double eps) {
  return "n=" + std::to_string(n) + " eps=" + format_real(eps);
}

// Records one zero-slack inequality chain a <= b (<= c) for a cell whose
// inputs are all exact; otherwise the cell is skipped.
void CheckChain(CheckResult& check, bool exact, const std::string& where,
                std::initializer_list<std::size_t> chain, const char* labels) {
  if (!exact) {
    ++check.cells_skipped;
    return;
  }
  ++check.cells_checked;
  const std::vector<std::size_t> v(chain);
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k - 1] > v[k]) {
      check.passed = false;
      std::string values;
      for (std::size_t x : v) values += (values.empty() ? "" : ", ") + std::to_string(x);
      check.failures.push_back(where + ": " + labels + " violated (" + values + ")");
      return;
    }
  }
}

CheckResult CountCheck(std::string name, std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.level = CheckLevel::Count;
  c.detail = std::move(detail);
  return c;
}

CheckResult EstimateCheck(std::string name, bool ok, std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.level = CheckLevel::Estimate;
  c.passed = ok;
  c.cells_checked = 1;
  c.detail = std::move(detail);
  if (!ok) c.failures.push_back(c.detail);
  return c;
}

}  // namespace

bool TheoremReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* TheoremReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TheoremReport compare_theorems(const DynamicalSystem& system, std::span<const std::size_t> n_list,
                               std::span<const double> epsilon_list, const TheoremOptions& options) {
  validate_schedule(n_list, epsilon_list);
  std::vector<double> extended;
  extended.push_back(epsilon_list.front() * 2.0);
  extended.insert(extended.end(), epsilon_list.begin(), epsilon_list.end());
  extended.push_back(epsilon_list.back() / 2.0);

  const QuasiMetric& e = system.metric;
  const QuasiMetric d_e = symmetrize_mean(e);
  const QuasiMetric m_e = symmetrize_max(e);
  const OrbitTable orbits =
      build_orbits(system.map, system.cloud, n_list.back(), options.estimate.snap, &system.metric);

  TheoremReport report;
  CountGridOptions both = options.estimate.grid;
  both.variants = {Variant::SymAnd, Variant::AsymOr};
  CountGridOptions metric_only = options.estimate.grid;
  metric_only.variants = {Variant::SymAnd};
  report.counts = count_grid(e, orbits, n_list, extended, both);
  report.counts_mean = count_grid(d_e, orbits, n_list, extended, metric_only);
  report.counts_max = count_grid(m_e, orbits, n_list, extended, metric_only);

  CheckResult sandwich1 = CountCheck("sandwich_symand", "r'_n(eps) <= s'_n(eps) <= r'_n(eps/2)");
  CheckResult sandwich2 = CountCheck("sandwich_asymor", "r''_n(eps) <= s''_n(eps) <= r''_n(eps/2)");
  CheckResult order = CountCheck("variant_order", "r''_n <= r'_n and s''_n <= s'_n");
  CheckResult mean_span = CountCheck("mean_metric_sandwich", "r'_n(2eps, e) <= r_n(eps, d_e) <= r'_n(eps, e)");
  CheckResult mean_sep = CountCheck("mean_metric_separated", "s_n(eps, d_e) <= s'_n(eps, e)");
  CheckResult max_rel = CountCheck("max_metric_relation", "two-sided relation under e equals the metric relation under m_e, bit for bit");
  CheckResult max_counts = CountCheck("max_metric_counts", "counts under e (two-sided) equal counts under m_e in every cell");
  CheckResult spans = CountCheck("maximal_separated_spans", "an exact maximum separated set is a spanning set of the paired variant");

  for (std::size_t k = 0; k < epsilon_list.size(); ++k) {
    const double eps = epsilon_list[k];
    const double twice = extended[k];
    const double half = extended[k + 2];
    for (std::size_t n : n_list) {
      const std::string where = Cell(n, eps);
      const CountCell& c1 = report.counts.at(n, eps, Variant::SymAnd);
      const CountCell& c1h = report.counts.at(n, half, Variant::SymAnd);
      const CountCell& c1t = report.counts.at(n, twice, Variant::SymAnd);
      const CountCell& c2 = report.counts.at(n, eps, Variant::AsymOr);
      const CountCell& c2h = report.counts.at(n, half, Variant::AsymOr);
      const CountCell& cd = report.counts_mean.at(n, eps, Variant::SymAnd);
      CheckChain(sandwich1, c1.exact() && c1h.spanning.optimal, where,
                 {c1.spanning.cardinality, c1.separated.cardinality, c1h.spanning.cardinality},
                 "r' <= s' <= r'(eps/2)");
      CheckChain(sandwich2, c2.exact() && c2h.spanning.optimal, where,
                 {c2.spanning.cardinality, c2.separated.cardinality, c2h.spanning.cardinality},
                 "r'' <= s'' <= r''(eps/2)");
      CheckChain(order, c1.spanning.optimal && c2.spanning.optimal, where,
                 {c2.spanning.cardinality, c1.spanning.cardinality}, "r'' <= r'");
      CheckChain(order, c1.separated.optimal && c2.separated.optimal, where,
                 {c2.separated.cardinality, c1.separated.cardinality}, "s'' <= s'");
      CheckChain(mean_span, c1t.spanning.optimal && cd.spanning.optimal && c1.spanning.optimal, where,
                 {c1t.spanning.cardinality, cd.spanning.cardinality, c1.spanning.cardinality},
                 "r'(2eps) <= r(eps, d_e) <= r'(eps)");
      CheckChain(mean_sep, cd.separated.optimal && c1.separated.optimal, where,
                 {cd.separated.cardinality, c1.separated.cardinality}, "s(eps, d_e) <= s'");
    }
  }

  BowenMatrix bowen_e(e, orbits);
  BowenMatrix bowen_m(m_e, orbits);
  for (std::size_t n : n_list) {
    bowen_e.advance_to(n);
    bowen_m.advance_to(n);
    for (double eps : extended) {
      const std::string where = Cell(n, eps);
      const RelationGraph sym = build_relation(bowen_e, eps, Variant::SymAnd);
      const RelationGraph metric = build_relation(bowen_m, eps, Variant::SymAnd);
      ++max_rel.cells_checked;
      if (sym.cover != metric.cover) {
        max_rel.passed = false;
        max_rel.failures.push_back(where + ": relations differ");
      }
      const CountCell& a = report.counts.at(n, eps, Variant::SymAnd);
      const CountCell& b = report.counts_max.at(n, eps, Variant::SymAnd);
      ++max_counts.cells_checked;
      if (a.spanning.cardinality != b.spanning.cardinality ||
          a.separated.cardinality != b.separated.cardinality) {
        max_counts.passed = false;
        max_counts.failures.push_back(where + ": counts differ");
      }
      for (Variant v : {Variant::SymAnd, Variant::AsymOr}) {
        const CountCell& cell = report.counts.at(n, eps, v);
        if (!cell.separated.optimal) {
          ++spans.cells_skipped;
          continue;
        }
        ++spans.cells_checked;
        const RelationGraph& rel = v == Variant::SymAnd ? sym : build_relation(bowen_e, eps, v);
        if (!is_spanning(rel, cell.separated.witness)) {
          spans.passed = false;
          spans.failures.push_back(where + " " + to_string(v) + ": separated witness does not span");
        }
      }
    }
  }
  for (CheckResult* c : {&sandwich1, &sandwich2, &order, &mean_span, &mean_sep, &max_rel, &max_counts, &spans}) {
    report.checks.push_back(std::move(*c));
  }

  try {
    const CountGrid e_grid = Restrict(report.counts, n_list, epsilon_list);
    report.h_prime = estimate_from_grid(e_grid, Variant::SymAnd, EntropyVariant::HPrime, options.estimate);
    report.h_double_prime =
        estimate_from_grid(e_grid, Variant::AsymOr, EntropyVariant::HDoublePrime, options.estimate);
    report.h_mean = estimate_from_grid(Restrict(report.counts_mean, n_list, epsilon_list), Variant::SymAnd,
                                       EntropyVariant::HMeanMetric, options.estimate);
    report.h_max = estimate_from_grid(Restrict(report.counts_max, n_list, epsilon_list), Variant::SymAnd,
                                      EntropyVariant::HMaxMetric, options.estimate);
  } catch (const Error& err) {
    report.checks.push_back(EstimateCheck("estimates_available", false, err.what()));
    return report;
  }
  const double h1 = report.h_prime.extrapolated;
  const double h2 = report.h_double_prime.extrapolated;
  const double hd = report.h_mean.extrapolated;
  const double hm = report.h_max.extrapolated;
  const double tol = options.estimator_tol;
  report.checks.push_back(EstimateCheck("h2_le_h1", h2 <= h1 + tol,
                                        "h''=" + format_real(h2) + " <= h'=" + format_real(h1) +
                                            " + " + format_real(tol)));
  report.checks.push_back(EstimateCheck("h_max_equals_h1", hm == h1,
                                        "h_m=" + format_real(hm) + " == h'=" + format_real(h1)));
  report.checks.push_back(EstimateCheck("h_mean_close_h1", std::fabs(hd - h1) <= tol,
                                        "|h_d - h'| = " + format_real(std::fabs(hd - h1)) + " <= " +
                                            format_real(tol)));
  return report;
}

PowerReport power_rule_check(const MapSpec& map, std::size_t m, const PointCloud& cloud, const QuasiMetric& e,
                             std::span<const std::size_t> n_list, std::span<const double> epsilon_list,
                             const PowerOptions& options) {
  validate_schedule(n_list, epsilon_list);
  if (m < 1) throw Error("power rule: m must be at least 1");
  PowerReport report;
  report.m = m;
  report.uc_declared = map.declared_uniformly_continuous();
  const MapSpec power_map = iterate_map(map, m);

  std::vector<std::size_t> base_n(n_list.begin(), n_list.end());
  for (std::size_t n : n_list) base_n.push_back(m * n);
  std::sort(base_n.begin(), base_n.end());
  base_n.erase(std::unique(base_n.begin(), base_n.end()), base_n.end());

  const OrbitTable base_orbits = build_orbits(map, cloud, base_n.back(), options.estimate.snap, &e);
  const OrbitTable power_orbits = build_orbits(power_map, cloud, n_list.back(), options.estimate.snap, &e);
  CountGridOptions grid_options = options.estimate.grid;
  grid_options.variants = {Variant::AsymOr};
  const CountGrid base_grid = count_grid(e, base_orbits, base_n, epsilon_list, grid_options);
  const CountGrid power_grid = count_grid(e, power_orbits, n_list, epsilon_list, grid_options);

  report.count_check.name = "power_count_inequality";
  report.count_check.level = CheckLevel::Count;
  report.count_check.detail = "r''_n(eps, T^m) <= r''_{mn}(eps, T)";
  for (std::size_t n : n_list) {
    for (double eps : epsilon_list) {
      const CountCell& lhs = power_grid.at(n, eps, Variant::AsymOr);
      const CountCell& rhs = base_grid.at(m * n, eps, Variant::AsymOr);
      CheckChain(report.count_check, lhs.spanning.optimal && rhs.spanning.optimal, Cell(n, eps),
                 {lhs.spanning.cardinality, rhs.spanning.cardinality}, "r''_n(T^m) <= r''_mn(T)");
    }
  }

  report.base = estimate_from_grid(Restrict(base_grid, n_list, epsilon_list), Variant::AsymOr,
                                   EntropyVariant::HDoublePrime, options.estimate);
  report.power = estimate_from_grid(power_grid, Variant::AsymOr, EntropyVariant::HDoublePrime, options.estimate);
  report.scaled_base = static_cast<double>(m) * report.base.extrapolated;
  report.tolerance = std::max(options.power_tol_rel * std::fabs(report.scaled_base), options.power_tol_abs);
  report.estimate_passed = std::fabs(report.power.extrapolated - report.scaled_base) <= report.tolerance;
  return report;
}

}  // namespace qme
