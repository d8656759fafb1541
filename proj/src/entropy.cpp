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

#include "qme/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qme {
namespace {

struct Selection {
  Variant cells = Variant::SymAnd;
  QuasiMetric metric;
};

Selection SelectCounts(const QuasiMetric& e, EntropyVariant variant) {
  switch (variant) {
    case EntropyVariant::HPrime:
      return {Variant::SymAnd, e};
    case EntropyVariant::HDoublePrime:
      return {Variant::AsymOr, e};
    case EntropyVariant::HMeanMetric:
      return {Variant::SymAnd, symmetrize_mean(e)};
    case EntropyVariant::HMaxMetric:
      return {Variant::SymAnd, symmetrize_max(e)};
  }
  return {Variant::SymAnd, e};
}

}  // namespace

std::string to_string(EntropyVariant v) {
  switch (v) {
    case EntropyVariant::HPrime:
      return "HPrime";
    case EntropyVariant::HDoublePrime:
      return "HDoublePrime";
    case EntropyVariant::HMeanMetric:
      return "HMeanMetric";
    case EntropyVariant::HMaxMetric:
      return "HMaxMetric";
  }
  return "unknown";
}

GrowthFit growth_rate(std::span<const CountPoint> counts, const GrowthOptions& options) {
  std::vector<CountPoint> usable;
  for (const CountPoint& p : counts) {
    if (p.cardinality == 0) throw Error("growth_rate: cardinalities must be at least 1");
    if (p.n < options.n_burn) continue;
    if (options.saturation_cap != 0 && p.cardinality > options.saturation_cap) continue;
    usable.push_back(p);
  }
  std::sort(usable.begin(), usable.end(), [](const CountPoint& a, const CountPoint& b) { return a.n < b.n; });
  if (options.window != 0 && usable.size() > options.window) {
    usable.erase(usable.begin(), usable.end() - static_cast<std::ptrdiff_t>(options.window));
  }
  if (usable.size() < 3) {
    throw Error("growth_rate: fewer than 3 usable points (" + std::to_string(usable.size()) + ")");
  }

  // Logs are taken relative to the first point so constant sequences give
  // an exactly zero slope.
  const double log0 = std::log(static_cast<double>(usable.front().cardinality));
  std::vector<double> xs;
  std::vector<double> ys;
  for (const CountPoint& p : usable) {
    xs.push_back(static_cast<double>(p.n));
    ys.push_back(std::log(static_cast<double>(p.cardinality)) - log0);
  }
  const double m = static_cast<double>(xs.size());
  double x_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    x_mean += xs[k];
    y_mean += ys[k];
  }
  x_mean /= m;
  y_mean /= m;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxy += (xs[k] - x_mean) * (ys[k] - y_mean);
    sxx += (xs[k] - x_mean) * (xs[k] - x_mean);
  }
  GrowthFit fit;
  fit.slope = sxy / sxx;
  double sse = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double r = ys[k] - (y_mean + fit.slope * (xs[k] - x_mean));
    sse += r * r;
  }
  fit.residual = std::sqrt(sse / m);
  fit.fit_points = usable.size();
  fit.max_increment = -INFINITY;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    fit.max_increment = std::max(fit.max_increment, (ys[k] - ys[k - 1]) / (xs[k] - xs[k - 1]));
  }
  for (const CountPoint& p : usable) fit.fitted_n.push_back(p.n);
  return fit;
}

void validate_schedule(std::span<const std::size_t> n_list, std::span<const double> epsilon_list) {
  if (n_list.empty()) throw Error("schedule: n list is empty");
  if (epsilon_list.empty()) throw Error("schedule: epsilon list is empty");
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    if (n_list[k] < 1 || (k > 0 && n_list[k] <= n_list[k - 1])) {
      throw Error("schedule: n list must be strictly increasing positive integers");
    }
  }
  for (std::size_t k = 0; k < epsilon_list.size(); ++k) {
    if (!(epsilon_list[k] > 0.0) || !std::isfinite(epsilon_list[k])) {
      throw Error("schedule: epsilon values must be positive and finite");
    }
    if (k > 0 && epsilon_list[k] != epsilon_list[k - 1] / 2.0) {
      throw Error("schedule: each epsilon must be half of the previous one (" +
                  format_real(epsilon_list[k - 1]) + " -> " + format_real(epsilon_list[k]) + ")");
    }
  }
}

EntropyEstimate estimate_from_grid(const CountGrid& grid, Variant variant, EntropyVariant label,
                                   const EstimateOptions& options) {
  EntropyEstimate est;
  est.variant = label;
  est.all_exact = true;
  GrowthOptions fit_options;
  fit_options.n_burn = options.n_burn;
  fit_options.window = options.window;
  if (options.saturation_fraction > 0.0) {
    fit_options.saturation_cap = std::max<std::size_t>(
        1, static_cast<std::size_t>(options.saturation_fraction * static_cast<double>(grid.cloud_size)));
  }

  std::vector<std::vector<CountPoint>> separated_series;
  for (double eps : grid.epsilon_list) {
    std::vector<CountPoint> separated;
    std::vector<CountPoint> spanning;
    for (std::size_t n : grid.n_list) {
      const CountCell& cell = grid.at(n, eps, variant);
      est.all_exact = est.all_exact && cell.exact();
      separated.push_back({n, cell.separated.cardinality});
      spanning.push_back({n, cell.spanning.cardinality});
    }
    EpsilonSlope row;
    row.epsilon = eps;
    try {
      const GrowthFit fit = growth_rate(separated, fit_options);
      row.resolved = true;
      row.slope = fit.slope;
      row.fit_points = fit.fit_points;
      row.residual = fit.residual;
      row.max_increment = fit.max_increment;
    } catch (const Error&) {
      est.diagnostics.push_back("epsilon=" + format_real(eps) +
                                ": fewer than 3 points below the saturation cap; not resolved");
    }
    try {
      const GrowthFit fit = growth_rate(spanning, fit_options);
      row.spanning_resolved = true;
      row.spanning_slope = fit.slope;
    } catch (const Error&) {
    }
    est.per_epsilon.push_back(row);
    separated_series.push_back(std::move(separated));
  }
  if (!est.all_exact) est.diagnostics.push_back("some counts come from greedy solvers");

  std::vector<const EpsilonSlope*> resolved;
  for (const EpsilonSlope& row : est.per_epsilon) {
    if (row.resolved) resolved.push_back(&row);
  }
  if (resolved.empty()) {
    GrowthOptions raw = fit_options;
    raw.saturation_cap = 0;
    const GrowthFit fit = growth_rate(separated_series.back(), raw);
    est.extrapolated = fit.slope;
    est.extrapolated_epsilon = grid.epsilon_list.back();
    est.stabilized = false;
    est.diagnostics.push_back("no epsilon resolved; extrapolated from the unfiltered fit at the smallest epsilon");
    return est;
  }
  est.extrapolated = resolved.back()->slope;
  est.extrapolated_epsilon = resolved.back()->epsilon;
  if (est.extrapolated_epsilon != grid.epsilon_list.back()) {
    est.diagnostics.push_back("smallest epsilon is resolution-limited; extrapolating from epsilon=" +
                              format_real(est.extrapolated_epsilon));
  }
  if (resolved.size() >= 2) {
    const double drift = std::fabs(resolved.back()->slope - resolved[resolved.size() - 2]->slope);
    est.stabilized = drift <= options.stability_tol;
    if (!est.stabilized) {
      est.diagnostics.push_back("slopes not stabilized: last two resolved epsilons differ by " + format_real(drift));
    }
  } else {
    est.diagnostics.push_back("only one resolved epsilon; stabilization not assessed");
  }
  for (std::size_t k = 1; k < resolved.size(); ++k) {
    const double drop = resolved[k - 1]->slope - resolved[k]->slope;
    if (drop > std::max(options.stability_tol, resolved[k]->residual)) {
      est.diagnostics.push_back("slope decreases as epsilon shrinks: " + format_real(resolved[k - 1]->epsilon) +
                                " -> " + format_real(resolved[k]->epsilon));
    }
  }
  return est;
}

EntropyEstimate estimate_entropy(const DynamicalSystem& system, EntropyVariant variant,
                                 std::span<const std::size_t> n_list, std::span<const double> epsilon_list,
                                 const EstimateOptions& options) {
  validate_schedule(n_list, epsilon_list);
  const Selection sel = SelectCounts(system.metric, variant);
  const OrbitTable orbits =
      build_orbits(system.map, system.cloud, n_list.back(), options.snap, &system.metric);
  CountGridOptions grid_options = options.grid;
  grid_options.variants = {sel.cells};
  const CountGrid grid = count_grid(sel.metric, orbits, n_list, epsilon_list, grid_options);
  return estimate_from_grid(grid, sel.cells, variant, options);
}

std::string entropy_csv(std::span<const EntropyEstimate> estimates) {
  std::ostringstream out;
  out << "epsilon,slope,residual,variant,log_base,resolved\n";
  for (const EntropyEstimate& est : estimates) {
    for (const EpsilonSlope& row : est.per_epsilon) {
      out << format_real(row.epsilon) << "," << format_real(row.slope) << "," << format_real(row.residual) << ","
          << to_string(est.variant) << ",e," << (row.resolved ? "true" : "false") << "\n";
    }
  }
  return out.str();
}

}  // namespace qme
