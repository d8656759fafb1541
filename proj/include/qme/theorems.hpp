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

#ifndef QME_THEOREMS_HPP_
#define QME_THEOREMS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qme/covering.hpp"
#include "qme/entropy.hpp"

namespace qme {

enum class CheckLevel { Count, Estimate };

struct CheckResult {
  std::string name;
  CheckLevel level = CheckLevel::Count;
  bool passed = true;
  std::size_t cells_checked = 0;
  // Cells where a required count was not solved exactly.
  std::size_t cells_skipped = 0;
  std::vector<std::string> failures;
  std::string detail;
};

struct TheoremOptions {
  EstimateOptions estimate;
  double estimator_tol = 0.05;
};

struct TheoremReport {
  std::vector<CheckResult> checks;
  EntropyEstimate h_prime;
  EntropyEstimate h_double_prime;
  EntropyEstimate h_mean;
  EntropyEstimate h_max;
  // Counts under e include one extra level on each side of the schedule
  // (2*eps_max and eps_min/2) for the sandwich checks.
  CountGrid counts;
  CountGrid counts_mean;
  CountGrid counts_max;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

// Count-level inequalities (zero slack, exact cells only), bitwise equality of
// the two-sided relation under e with the metric relation under m_e, and the
// estimate-level relations between the four entropy estimates.
TheoremReport compare_theorems(const DynamicalSystem& system,
                               std::span<const std::size_t> n_list,
                               std::span<const double> epsilon_list,
                               const TheoremOptions& options = {});

struct PowerOptions {
  EstimateOptions estimate;
  double power_tol_rel = 0.2;
  double power_tol_abs = 0.05;
};

struct PowerReport {
  std::size_t m = 1;
  bool uc_declared = true;
  // r''_n(eps, T^m) <= r''_{mn}(eps, T) per cell.
  CheckResult count_check;
  EntropyEstimate base;   // h''(T)
  EntropyEstimate power;  // h''(T^m)
  double scaled_base = 0.0;  // m * h''(T)
  double tolerance = 0.0;
  bool estimate_passed = false;

  bool passed() const { return uc_declared && count_check.passed && estimate_passed; }
};

PowerReport power_rule_check(const MapSpec& map, std::size_t m, const PointCloud& cloud,
                             const QuasiMetric& e, std::span<const std::size_t> n_list,
                             std::span<const double> epsilon_list,
                             const PowerOptions& options = {});

}  // namespace qme

#endif  // QME_THEOREMS_HPP_
