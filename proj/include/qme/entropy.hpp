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

#ifndef QME_ENTROPY_HPP_
#define QME_ENTROPY_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qme/covering.hpp"
#include "qme/dynamics.hpp"
#include "qme/point_cloud.hpp"
#include "qme/quasimetric.hpp"

namespace qme {

enum class EntropyVariant {
  HPrime,        // two-sided spanning / OR-separated counts under e
  HDoublePrime,  // one-sided spanning / AND-separated counts under e
  HMeanMetric,   // metric counts under d_e
  HMaxMetric,    // metric counts under m_e
};

std::string to_string(EntropyVariant v);

struct CountPoint {
  std::size_t n = 0;
  std::size_t cardinality = 0;
};

struct GrowthOptions {
  // Points with n < n_burn are ignored.
  std::size_t n_burn = 2;
  // Keep only the `window` largest-n points; 0 keeps all.
  std::size_t window = 0;
  // Counts above this value are resolution-limited and ignored; 0 disables.
  std::size_t saturation_cap = 0;
};

struct GrowthFit {
  double slope = 0.0;     // least-squares slope of log(count) against n
  double residual = 0.0;  // RMS residual of that fit
  std::size_t fit_points = 0;
  // Secondary estimator: max over consecutive fitted points of
  // (log c_b - log c_a) / (n_b - n_a).
  double max_increment = 0.0;
  std::vector<std::size_t> fitted_n;
};

// Throws Error when fewer than three usable points remain or a count is zero.
GrowthFit growth_rate(std::span<const CountPoint> counts, const GrowthOptions& options = {});

struct EstimateOptions {
  CountGridOptions grid;
  SnapMode snap = SnapMode::ExactClosed;
  std::size_t n_burn = 2;
  std::size_t window = 0;
  // Counts above saturation_fraction * |cloud| are excluded from fits.
  double saturation_fraction = 0.25;
  double stability_tol = 0.05;
};

struct EpsilonSlope {
  double epsilon = 0.0;
  // False when fewer than three unsaturated points were available.
  bool resolved = false;
  double slope = 0.0;  // from separated counts
  std::size_t fit_points = 0;
  double residual = 0.0;
  double max_increment = 0.0;
  bool spanning_resolved = false;
  double spanning_slope = 0.0;  // cross-check from spanning counts
};

struct EntropyEstimate {
  EntropyVariant variant = EntropyVariant::HPrime;
  std::vector<EpsilonSlope> per_epsilon;
  // Slope at the smallest resolved epsilon (natural log units).
  double extrapolated = 0.0;
  double extrapolated_epsilon = 0.0;
  // |slope(last) - slope(second to last)| <= stability_tol over resolved eps.
  bool stabilized = false;
  // Every count used came from the exact solvers.
  bool all_exact = false;
  std::vector<std::string> diagnostics;
};

struct DynamicalSystem {
  MapSpec map;
  PointCloud cloud;
  QuasiMetric metric;
};

// Reads the cells of `variant` from `grid` and fits one growth rate per
// epsilon. `label` only names the result.
EntropyEstimate estimate_from_grid(const CountGrid& grid, Variant variant,
                                   EntropyVariant label, const EstimateOptions& options);

// Builds orbits and the count grid for the requested variant, then fits.
// epsilon_list must be geometric with ratio 1/2.
EntropyEstimate estimate_entropy(const DynamicalSystem& system, EntropyVariant variant,
                                 std::span<const std::size_t> n_list,
                                 std::span<const double> epsilon_list,
                                 const EstimateOptions& options = {});

// Validates a schedule: n strictly increasing and >= 1; epsilon positive and
// each element exactly half of the previous one. Throws Error otherwise.
void validate_schedule(std::span<const std::size_t> n_list, std::span<const double> epsilon_list);

// Flat CSV rows: epsilon,slope,residual,variant,log_base.
std::string entropy_csv(std::span<const EntropyEstimate> estimates);

}  // namespace qme

#endif  // QME_ENTROPY_HPP_
