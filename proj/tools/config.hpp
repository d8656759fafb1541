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

#ifndef QME_TOOLS_CONFIG_HPP_
#define QME_TOOLS_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qme/common.hpp"
#include "qme/covering.hpp"
#include "qme/dynamics.hpp"
#include "qme/entropy.hpp"
#include "qme/point_cloud.hpp"
#include "qme/quasimetric.hpp"
#include "qme/theorems.hpp"

namespace qme::app {

// Raised for malformed or inconsistent configuration documents.
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { Csv, Json, Both };

OutputFormat parse_format(const std::string& text);
bool wants_csv(OutputFormat f);
bool wants_json(OutputFormat f);

struct RunConfig {
  MapSpec map = MapSpec::identity();
  PointCloud cloud = PointCloud::indices(1);
  QuasiMetric metric = QuasiMetric::euclidean();
  std::vector<std::size_t> n_list;
  std::vector<double> epsilon_list;
  std::vector<Variant> variants{Variant::SymAnd, Variant::AsymOr};
  SnapMode snap = SnapMode::ExactClosed;
  SolverOptions solver;
  std::uint64_t seed = 0;
  std::uint64_t triple_budget = 2'000'000;
  std::size_t n_burn = 2;
  std::size_t window = 0;
  double saturation_fraction = 0.25;
  double stability_tol = 0.05;
  double estimator_tol = 0.05;
  double power_tol_rel = 0.2;
  double power_tol_abs = 0.05;
  std::size_t power_m = 2;
  std::filesystem::path out_dir = "qme_out";
  OutputFormat format = OutputFormat::Both;

  EstimateOptions estimate_options() const;
  TheoremOptions theorem_options() const;
  PowerOptions power_options() const;
};

// Parses a YAML document. Relative file paths inside it resolve against
// base_dir. Throws ConfigError.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

// Annotated example document listing every key with its default.
extern const char* const kExampleConfig;

}  // namespace qme::app

#endif  // QME_TOOLS_CONFIG_HPP_
