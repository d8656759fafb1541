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

#ifndef QME_DYNAMICS_HPP_
#define QME_DYNAMICS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qme/common.hpp"
#include "qme/point_cloud.hpp"
#include "qme/quasimetric.hpp"

namespace qme {

enum class MapKind { Identity, Doubling, Tent, Logistic, ShiftLeft, Affine };

// A self-map T of the sample space. Iterates that have a closed form
// (multiplication mod 1, affine maps, shifts) are stored in that form; the
// rest keep a repeat count.
class MapSpec {
 public:
  static MapSpec identity();
  // x -> 2x mod 1, coordinate-wise.
  static MapSpec doubling();
  // x -> slope * min(x, 1 - x) on [0, 1]; slope in (0, 2].
  static MapSpec tent(double slope);
  // x -> r x (1 - x) on [0, 1]; r in (0, 4].
  static MapSpec logistic(double r);
  // (b_0, ..., b_{L-1}) -> (b_1, ..., b_{L-1}, 0).
  static MapSpec shift_left();
  // x -> a x + b, coordinate-wise.
  static MapSpec affine(double a, double b);

  MapKind kind() const { return kind_; }
  std::uint64_t multiplier() const { return multiplier_; }
  std::size_t shift() const { return shift_; }
  double slope() const { return p0_; }
  double rate() const { return p0_; }
  double a() const { return p0_; }
  double b() const { return p1_; }
  std::size_t repeat() const { return repeat_; }

  bool declared_uniformly_continuous() const { return uniformly_continuous_; }
  MapSpec with_uniform_continuity(bool declared) const;

  // Applies the map to one point in place. Throws Error when the point lies
  // outside the map's domain.
  void apply(std::span<double> x) const;

  std::string description() const;

  friend MapSpec iterate_map(const MapSpec& map, std::size_t m);
  friend bool operator==(const MapSpec&, const MapSpec&) = default;

 private:
  MapSpec() = default;
  void ApplyOnce(std::span<double> x) const;

  MapKind kind_ = MapKind::Identity;
  double p0_ = 0.0;
  double p1_ = 0.0;
  std::uint64_t multiplier_ = 2;
  std::size_t shift_ = 1;
  std::size_t repeat_ = 1;
  bool uniformly_continuous_ = true;
};

// m-fold composition T^m; iterate_map(T, 1) == T.
MapSpec iterate_map(const MapSpec& map, std::size_t m);

enum class SnapMode { ExactClosed, NearestNeighbor };

// images(x, i) = T^i(x) for i < n_max. Immutable once built.
class OrbitTable {
 public:
  std::size_t n_max() const { return n_max_; }
  std::size_t size() const { return size_; }
  std::size_t dim() const { return dim_; }
  SnapMode snap_mode() const { return mode_; }
  // Largest m_e distance between a true image and its snapped cloud point;
  // zero in ExactClosed mode.
  double max_snap_error() const { return max_snap_error_; }

  std::span<const double> image(PointId x, std::size_t i) const {
    return {images_.data() + (x * n_max_ + i) * dim_, dim_};
  }

 private:
  friend OrbitTable build_orbits(const MapSpec&, const PointCloud&, std::size_t,
                                 SnapMode, const QuasiMetric*);

  std::size_t n_max_ = 0;
  std::size_t size_ = 0;
  std::size_t dim_ = 0;
  SnapMode mode_ = SnapMode::ExactClosed;
  double max_snap_error_ = 0.0;
  std::vector<double> images_;
};

// Precomputes orbits of every cloud point. NearestNeighbor mode snaps each
// image to the closest cloud point under max(e(a,b), e(b,a)) and needs
// `metric`; ties go to the lowest id.
OrbitTable build_orbits(const MapSpec& map, const PointCloud& cloud, std::size_t n_max,
                        SnapMode mode = SnapMode::ExactClosed,
                        const QuasiMetric* metric = nullptr);

// max over x of the m_e distance from x to its nearest other cloud point.
double covering_radius(const QuasiMetric& e, const PointCloud& cloud);

}  // namespace qme

#endif  // QME_DYNAMICS_HPP_
