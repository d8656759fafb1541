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

#ifndef QME_QUASIMETRIC_HPP_
#define QME_QUASIMETRIC_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qme/common.hpp"
#include "qme/point_cloud.hpp"

namespace qme {

class OrbitTable;

enum class MetricKind {
  Example1Line,     // e(x,y) = y - x if y >= x, else 1
  EuclideanSym,     // |x - y|_2
  CircleArc,        // per-coordinate arc length on R/Z, max over coordinates
  WeightedAsym,     // sum_k alpha*(y_k - x_k)^+ + beta*(x_k - y_k)^+
  MatrixBacked,     // table lookup; points are row indices
  BlockPrefix,      // 2^-j, j = first index where the blocks differ
  BlockPrefixAsym,  // as BlockPrefix, halved unless x_j > y_j
};

enum class Symmetrization { None, Mean, Max };

// Distance rule e(x, y) >= 0 on real vectors. Cheap to copy: matrix storage
// and symmetrization bases are shared.
class QuasiMetric {
 public:
  static QuasiMetric example1_line();
  static QuasiMetric euclidean();
  static QuasiMetric circle_arc();
  static QuasiMetric weighted_asym(double alpha, double beta);
  // Row-major n x n table; must be finite, nonnegative, zero on the diagonal.
  static QuasiMetric matrix_backed(std::vector<double> entries, std::size_t n);
  static QuasiMetric block_prefix();
  static QuasiMetric block_prefix_asym();

  // Throws Error on dimension mismatch or out-of-range matrix index.
  double operator()(std::span<const double> x, std::span<const double> y) const;

  MetricKind kind() const { return kind_; }
  Symmetrization symmetrization() const { return sym_; }
  // The wrapped rule for symmetrized metrics, nullptr otherwise.
  const QuasiMetric* base() const { return base_.get(); }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  std::size_t matrix_size() const { return matrix_n_; }
  double matrix_at(std::size_t i, std::size_t j) const { return (*matrix_)[i * matrix_n_ + j]; }

  // Required point dimension, if the rule fixes one.
  std::optional<std::size_t> required_dim() const;
  // True when symmetry holds by construction (not by sampling).
  bool symmetric_by_construction() const;
  std::string description() const;

  friend QuasiMetric symmetrize_mean(const QuasiMetric& e);
  friend QuasiMetric symmetrize_max(const QuasiMetric& e);

 private:
  QuasiMetric() = default;
  double EvaluateBase(std::span<const double> x, std::span<const double> y) const;

  MetricKind kind_ = MetricKind::EuclideanSym;
  Symmetrization sym_ = Symmetrization::None;
  std::shared_ptr<const QuasiMetric> base_;
  double alpha_ = 1.0;
  double beta_ = 1.0;
  std::shared_ptr<const std::vector<double>> matrix_;
  std::size_t matrix_n_ = 0;
};

// d_e(x,y) = (e(x,y) + e(y,x)) / 2.
QuasiMetric symmetrize_mean(const QuasiMetric& e);
// m_e(x,y) = max(e(x,y), e(y,x)).
QuasiMetric symmetrize_max(const QuasiMetric& e);

// Parses the `qmetric,v1,<n>` CSV format.
QuasiMetric load_matrix_csv(const std::string& path);
QuasiMetric parse_matrix_csv(const std::string& text);

struct TriangleViolation {
  PointId x = 0;
  PointId y = 0;
  PointId z = 0;
  double lhs = 0.0;  // e(x,z)
  double rhs = 0.0;  // e(x,y) + e(y,z)
};

// Only the first violations found are stored; violation_count has them all.
inline constexpr std::size_t kMaxRecordedViolations = 100;

struct AxiomReport {
  bool nonnegativity_ok = true;
  bool identity_ok = true;
  bool triangle_ok = true;
  std::vector<TriangleViolation> violations;
  std::uint64_t violation_count = 0;
  bool symmetric = true;
  double max_asymmetry = 0.0;
  bool exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::uint64_t pairs_checked = 0;

  bool all_ok() const { return nonnegativity_ok && identity_ok && triangle_ok; }
};

// Checks nonnegativity, identity of indiscernibles and the triangle
// inequality on the cloud. All triples are examined when size^3 fits in
// `triple_budget`; otherwise `triple_budget` triples are drawn from a
// generator seeded with `seed`. Pairs follow the same rule against the budget.
AxiomReport check_axioms(const QuasiMetric& e, const PointCloud& cloud,
                         std::uint64_t triple_budget, std::uint64_t seed = 0);

enum class BallSide { Right, Left, TwoSided };

struct BallSpec {
  PointId center = 0;
  double radius = 0.0;
  BallSide side = BallSide::Right;
  bool closed = false;
};

// Right: {x : e(p,x) < t}; Left: {x : e(x,p) < t}; TwoSided: both. Closed
// balls use <=. Returned ids are ascending.
std::vector<PointId> ball_members(const QuasiMetric& e, const PointCloud& cloud,
                                  const BallSpec& ball);

// e_n(x,y) = max_{0 <= i < n} e(T^i x, T^i y).
double bowen_distance(const QuasiMetric& e, const OrbitTable& orbits, PointId x,
                      PointId y, std::size_t n);

}  // namespace qme

#endif  // QME_QUASIMETRIC_HPP_
