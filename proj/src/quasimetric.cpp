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

#include "qme/quasimetric.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "qme/dynamics.hpp"

namespace qme {
namespace {

std::size_t MatrixIndex(double coordinate, std::size_t n) {
  if (!(coordinate >= 0.0) || coordinate != std::floor(coordinate) ||
      coordinate >= static_cast<double>(n)) {
    throw Error("matrix-backed metric: index " + format_real(coordinate) + " out of range [0, " +
                std::to_string(n) + ")");
  }
  return static_cast<std::size_t>(coordinate);
}

double ArcLength(double a, double b) {
  double d = std::fabs(a - b);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

}  // namespace

QuasiMetric QuasiMetric::example1_line() {
  QuasiMetric e;
  e.kind_ = MetricKind::Example1Line;
  return e;
}

QuasiMetric QuasiMetric::euclidean() {
  QuasiMetric e;
  e.kind_ = MetricKind::EuclideanSym;
  return e;
}

QuasiMetric QuasiMetric::circle_arc() {
  QuasiMetric e;
  e.kind_ = MetricKind::CircleArc;
  return e;
}

QuasiMetric QuasiMetric::weighted_asym(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error("weighted_asym: alpha and beta must be positive and finite");
  }
  QuasiMetric e;
  e.kind_ = MetricKind::WeightedAsym;
  e.alpha_ = alpha;
  e.beta_ = beta;
  return e;
}

QuasiMetric QuasiMetric::matrix_backed(std::vector<double> entries, std::size_t n) {
  if (n == 0) throw Error("matrix-backed metric: empty matrix");
  if (entries.size() != n * n) throw Error("matrix-backed metric: matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = entries[i * n + j];
      if (!std::isfinite(v) || v < 0.0) {
        throw Error("matrix-backed metric: entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") is negative or non-finite");
      }
      if (i == j && v != 0.0) {
        throw Error("matrix-backed metric: nonzero diagonal at " + std::to_string(i));
      }
    }
  }
  QuasiMetric e;
  e.kind_ = MetricKind::MatrixBacked;
  e.matrix_ = std::make_shared<const std::vector<double>>(std::move(entries));
  e.matrix_n_ = n;
  return e;
}

QuasiMetric QuasiMetric::block_prefix() {
  QuasiMetric e;
  e.kind_ = MetricKind::BlockPrefix;
  return e;
}

QuasiMetric QuasiMetric::block_prefix_asym() {
  QuasiMetric e;
  e.kind_ = MetricKind::BlockPrefixAsym;
  return e;
}

QuasiMetric symmetrize_mean(const QuasiMetric& e) {
  QuasiMetric d = e;
  d.sym_ = Symmetrization::Mean;
  d.base_ = std::make_shared<const QuasiMetric>(e);
  return d;
}

QuasiMetric symmetrize_max(const QuasiMetric& e) {
  QuasiMetric m = e;
  m.sym_ = Symmetrization::Max;
  m.base_ = std::make_shared<const QuasiMetric>(e);
  return m;
}

double QuasiMetric::operator()(std::span<const double> x, std::span<const double> y) const {
  switch (sym_) {
    case Symmetrization::None:
      return EvaluateBase(x, y);
    case Symmetrization::Mean:
      return ((*base_)(x, y) + (*base_)(y, x)) / 2.0;
    case Symmetrization::Max:
      return std::max((*base_)(x, y), (*base_)(y, x));
  }
  return 0.0;
}

double QuasiMetric::EvaluateBase(std::span<const double> x, std::span<const double> y) const {
  if (x.size() != y.size() || x.empty()) {
    throw Error("quasi-metric: dimension mismatch (" + std::to_string(x.size()) + " vs " +
                std::to_string(y.size()) + ")");
  }
  switch (kind_) {
    case MetricKind::Example1Line:
      if (x.size() != 1) throw Error("Example1Line: points must be one-dimensional");
      return y[0] >= x[0] ? y[0] - x[0] : 1.0;
    case MetricKind::EuclideanSym: {
      if (x.size() == 1) return std::fabs(x[0] - y[0]);
      double s = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) s += (x[k] - y[k]) * (x[k] - y[k]);
      return std::sqrt(s);
    }
    case MetricKind::CircleArc: {
      double m = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) m = std::max(m, ArcLength(x[k], y[k]));
      return m;
    }
    case MetricKind::WeightedAsym: {
      double s = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        s += y[k] >= x[k] ? alpha_ * (y[k] - x[k]) : beta_ * (x[k] - y[k]);
      }
      return s;
    }
    case MetricKind::MatrixBacked: {
      if (x.size() != 1) throw Error("matrix-backed metric: points must be indices");
      return (*matrix_)[MatrixIndex(x[0], matrix_n_) * matrix_n_ + MatrixIndex(y[0], matrix_n_)];
    }
    case MetricKind::BlockPrefix:
    case MetricKind::BlockPrefixAsym: {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] != y[j]) {
          const int exponent = -static_cast<int>(j);
          if (kind_ == MetricKind::BlockPrefix || x[j] > y[j]) return std::ldexp(1.0, exponent);
          return std::ldexp(1.0, exponent - 1);
        }
      }
      return 0.0;
    }
  }
  return 0.0;
}

std::optional<std::size_t> QuasiMetric::required_dim() const {
  if (base_) return base_->required_dim();
  switch (kind_) {
    case MetricKind::Example1Line:
    case MetricKind::MatrixBacked:
      return 1;
    default:
      return std::nullopt;
  }
}

bool QuasiMetric::symmetric_by_construction() const {
  if (sym_ != Symmetrization::None) return true;
  return kind_ == MetricKind::EuclideanSym || kind_ == MetricKind::CircleArc ||
         kind_ == MetricKind::BlockPrefix;
}

std::string QuasiMetric::description() const {
  if (sym_ == Symmetrization::Mean) return "mean(" + base_->description() + ")";
  if (sym_ == Symmetrization::Max) return "max(" + base_->description() + ")";
  switch (kind_) {
    case MetricKind::Example1Line:
      return "Example1Line";
    case MetricKind::EuclideanSym:
      return "EuclideanSym";
    case MetricKind::CircleArc:
      return "CircleArc";
    case MetricKind::WeightedAsym:
      return "WeightedAsym(alpha=" + format_real(alpha_) + ", beta=" + format_real(beta_) + ")";
    case MetricKind::MatrixBacked:
      return "MatrixBacked(" + std::to_string(matrix_n_) + "x" + std::to_string(matrix_n_) + ")";
    case MetricKind::BlockPrefix:
      return "BlockPrefix";
    case MetricKind::BlockPrefixAsym:
      return "BlockPrefixAsym";
  }
  return "unknown";
}

QuasiMetric parse_matrix_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error("matrix csv: missing header");
  line.erase(std::remove_if(line.begin(), line.end(), ::isspace), line.end());
  const std::string prefix = "qmetric,v1,";
  if (line.rfind(prefix, 0) != 0) throw Error("matrix csv: header must be 'qmetric,v1,<n>'");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long long parsed = std::stoll(line.substr(prefix.size()), &used);
    if (parsed <= 0 || used != line.size() - prefix.size()) throw Error("");
    n = static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    throw Error("matrix csv: bad size in header '" + line + "'");
  }
  std::vector<double> entries;
  entries.reserve(n * n);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(fields, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw Error("");
        entries.push_back(v);
      } catch (const std::exception&) {
        throw Error("matrix csv: bad value '" + cell + "' in row " + std::to_string(rows));
      }
      ++cols;
    }
    if (cols != n) {
      throw Error("matrix csv: row " + std::to_string(rows) + " has " + std::to_string(cols) +
                  " values, expected " + std::to_string(n));
    }
    ++rows;
  }
  if (rows != n) throw Error("matrix csv: expected " + std::to_string(n) + " rows, got " + std::to_string(rows));
  return QuasiMetric::matrix_backed(std::move(entries), n);
}

QuasiMetric load_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_csv(buffer.str());
}

AxiomReport check_axioms(const QuasiMetric& e, const PointCloud& cloud,
                         std::uint64_t triple_budget, std::uint64_t seed) {
  AxiomReport report;
  const std::size_t n = cloud.size();
  triple_budget = std::max<std::uint64_t>(triple_budget, 1);
  std::mt19937_64 rng(seed);
  auto pick = [&] { return static_cast<PointId>(rng() % n); };

  auto check_pair = [&](PointId x, PointId y) {
    const double xy = e(cloud.point(x), cloud.point(y));
    const double yx = e(cloud.point(y), cloud.point(x));
    ++report.pairs_checked;
    if (!std::isfinite(xy) || xy < 0.0) report.nonnegativity_ok = false;
    if (x == y ? xy != 0.0 : !(xy > 0.0)) report.identity_ok = false;
    report.max_asymmetry = std::max(report.max_asymmetry, std::fabs(xy - yx));
  };

  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * n;
  if (pairs <= triple_budget) {
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) check_pair(x, y);
    }
  } else {
    report.exhaustive = false;
    for (PointId x = 0; x < n; ++x) check_pair(x, x);
    for (std::uint64_t k = 0; k < triple_budget; ++k) check_pair(pick(), pick());
  }
  report.symmetric = report.max_asymmetry == 0.0;

  auto check_triple = [&](PointId x, PointId y, PointId z, double xy, double yz, double xz) {
    ++report.triples_checked;
    if (xz > xy + yz) {
      report.triangle_ok = false;
      ++report.violation_count;
      if (report.violations.size() < kMaxRecordedViolations) report.violations.push_back({x, y, z, xz, xy + yz});
    }
  };

  const bool exhaustive = n <= 2097151 && pairs * n <= triple_budget;
  if (exhaustive) {
    std::vector<double> table(pairs);
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) table[x * n + y] = e(cloud.point(x), cloud.point(y));
    }
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        for (PointId z = 0; z < n; ++z) {
          check_triple(x, y, z, table[x * n + y], table[y * n + z], table[x * n + z]);
        }
      }
    }
  } else {
    report.exhaustive = false;
    for (std::uint64_t k = 0; k < triple_budget; ++k) {
      const PointId x = pick();
      const PointId y = pick();
      const PointId z = pick();
      check_triple(x, y, z, e(cloud.point(x), cloud.point(y)), e(cloud.point(y), cloud.point(z)),
                   e(cloud.point(x), cloud.point(z)));
    }
  }
  return report;
}

std::vector<PointId> ball_members(const QuasiMetric& e, const PointCloud& cloud,
                                  const BallSpec& ball) {
  if (ball.center >= cloud.size()) {
    throw Error("ball_members: unknown center id " + std::to_string(ball.center));
  }
  if (!(ball.radius > 0.0)) throw Error("ball_members: radius must be positive");
  auto inside = [&](double d) { return ball.closed ? d <= ball.radius : d < ball.radius; };
  const auto p = cloud.point(ball.center);
  std::vector<PointId> members;
  for (PointId x = 0; x < cloud.size(); ++x) {
    const bool right = inside(e(p, cloud.point(x)));
    const bool left = inside(e(cloud.point(x), p));
    bool in = false;
    switch (ball.side) {
      case BallSide::Right:
        in = right;
        break;
      case BallSide::Left:
        in = left;
        break;
      case BallSide::TwoSided:
        in = right && left;
        break;
    }
    if (in) members.push_back(x);
  }
  return members;
}

double bowen_distance(const QuasiMetric& e, const OrbitTable& orbits, PointId x, PointId y,
                      std::size_t n) {
  if (n < 1 || n > orbits.n_max()) {
    throw Error("bowen_distance: n=" + std::to_string(n) + " outside [1, " +
                std::to_string(orbits.n_max()) + "]");
  }
  if (x >= orbits.size() || y >= orbits.size()) throw Error("bowen_distance: unknown point id");
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, e(orbits.image(x, i), orbits.image(y, i)));
  return m;
}

}  // namespace qme
