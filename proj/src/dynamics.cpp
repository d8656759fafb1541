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

#include "qme/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qme/parallel.hpp"

namespace qme {

MapSpec MapSpec::identity() { return MapSpec{}; }

MapSpec MapSpec::doubling() {
  MapSpec t;
  t.kind_ = MapKind::Doubling;
  t.multiplier_ = 2;
  return t;
}

MapSpec MapSpec::tent(double slope) {
  if (!(slope > 0.0 && slope <= 2.0)) throw Error("tent: slope must lie in (0, 2]");
  MapSpec t;
  t.kind_ = MapKind::Tent;
  t.p0_ = slope;
  return t;
}

MapSpec MapSpec::logistic(double r) {
  if (!(r > 0.0 && r <= 4.0)) throw Error("logistic: r must lie in (0, 4]");
  MapSpec t;
  t.kind_ = MapKind::Logistic;
  t.p0_ = r;
  return t;
}

MapSpec MapSpec::shift_left() {
  MapSpec t;
  t.kind_ = MapKind::ShiftLeft;
  t.shift_ = 1;
  return t;
}

MapSpec MapSpec::affine(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw Error("affine: parameters must be finite");
  MapSpec t;
  t.kind_ = MapKind::Affine;
  t.p0_ = a;
  t.p1_ = b;
  return t;
}

MapSpec MapSpec::with_uniform_continuity(bool declared) const {
  MapSpec t = *this;
  t.uniformly_continuous_ = declared;
  return t;
}

void MapSpec::apply(std::span<double> x) const {
  for (std::size_t k = 0; k < repeat_; ++k) ApplyOnce(x);
}

void MapSpec::ApplyOnce(std::span<double> x) const {
  switch (kind_) {
    case MapKind::Identity:
      return;
    case MapKind::Doubling:
      for (double& v : x) {
        const double scaled = static_cast<double>(multiplier_) * v;
        v = scaled - std::floor(scaled);
      }
      return;
    case MapKind::Tent:
    case MapKind::Logistic:
      for (double& v : x) {
        if (!(v >= 0.0 && v <= 1.0)) {
          throw Error(description() + ": point " + format_real(v) + " outside [0, 1]");
        }
        v = kind_ == MapKind::Tent ? p0_ * std::min(v, 1.0 - v) : p0_ * v * (1.0 - v);
      }
      return;
    case MapKind::ShiftLeft:
      for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = j + shift_ < x.size() ? x[j + shift_] : 0.0;
      }
      return;
    case MapKind::Affine:
      for (double& v : x) v = p0_ * v + p1_;
      return;
  }
}

std::string MapSpec::description() const {
  std::ostringstream out;
  switch (kind_) {
    case MapKind::Identity:
      out << "Identity";
      break;
    case MapKind::Doubling:
      out << "x -> " << multiplier_ << "x mod 1";
      break;
    case MapKind::Tent:
      out << "Tent(" << format_real(p0_) << ")";
      break;
    case MapKind::Logistic:
      out << "Logistic(" << format_real(p0_) << ")";
      break;
    case MapKind::ShiftLeft:
      out << "ShiftLeft";
      if (shift_ != 1) out << "^" << shift_;
      break;
    case MapKind::Affine:
      out << "Affine(" << format_real(p0_) << ", " << format_real(p1_) << ")";
      break;
  }
  if (repeat_ != 1) out << "^" << repeat_;
  return out.str();
}

MapSpec iterate_map(const MapSpec& map, std::size_t m) {
  if (m == 0) throw Error("iterate_map: m must be at least 1");
  MapSpec t = map;
  switch (map.kind_) {
    case MapKind::Identity:
      break;
    case MapKind::Doubling:
      for (std::size_t k = 1; k < m; ++k) {
        if (t.multiplier_ > (std::uint64_t{1} << 52) / map.multiplier_) {
          throw Error("iterate_map: multiplier overflow");
        }
        t.multiplier_ *= map.multiplier_;
      }
      break;
    case MapKind::ShiftLeft:
      t.shift_ = map.shift_ * m;
      break;
    case MapKind::Affine:
      for (std::size_t k = 1; k < m; ++k) {
        t.p1_ = map.p0_ * t.p1_ + map.p1_;
        t.p0_ = map.p0_ * t.p0_;
      }
      break;
    case MapKind::Tent:
    case MapKind::Logistic:
      t.repeat_ = map.repeat_ * m;
      break;
  }
  return t;
}

OrbitTable build_orbits(const MapSpec& map, const PointCloud& cloud, std::size_t n_max,
                        SnapMode mode, const QuasiMetric* metric) {
  if (n_max < 1) throw Error("build_orbits: n_max must be at least 1");
  OrbitTable table;
  table.n_max_ = n_max;
  table.size_ = cloud.size();
  table.dim_ = cloud.dim();
  table.mode_ = mode;
  table.images_.resize(table.size_ * n_max * table.dim_);
  const std::size_t dim = table.dim_;
  auto slot = [&](PointId x, std::size_t i) {
    return std::span<double>(table.images_.data() + (x * n_max + i) * dim, dim);
  };

  if (mode == SnapMode::ExactClosed) {
    parallel_for(cloud.size(), [&](std::size_t x) {
      auto first = slot(x, 0);
      std::copy(cloud.point(x).begin(), cloud.point(x).end(), first.begin());
      for (std::size_t i = 1; i < n_max; ++i) {
        auto prev = slot(x, i - 1);
        auto next = slot(x, i);
        std::copy(prev.begin(), prev.end(), next.begin());
        map.apply(next);
      }
    });
    return table;
  }

  if (metric == nullptr) throw Error("build_orbits: nearest-neighbor snapping needs a metric");
  const QuasiMetric snap_metric = symmetrize_max(*metric);
  // Images of cloud points always snap back into the cloud, so one successor
  // per point determines every orbit.
  std::vector<PointId> successor(cloud.size());
  std::vector<double> snap_error(cloud.size());
  parallel_for(cloud.size(), [&](std::size_t x) {
    std::vector<double> image(cloud.point(x).begin(), cloud.point(x).end());
    map.apply(image);
    double best = std::numeric_limits<double>::infinity();
    PointId best_id = 0;
    for (PointId y = 0; y < cloud.size(); ++y) {
      const double d = snap_metric(image, cloud.point(y));
      if (d < best) {
        best = d;
        best_id = y;
      }
    }
    successor[x] = best_id;
    snap_error[x] = best;
  });
  for (PointId x = 0; x < cloud.size(); ++x) {
    PointId current = x;
    for (std::size_t i = 0; i < n_max; ++i) {
      if (i > 0) {
        table.max_snap_error_ = std::max(table.max_snap_error_, snap_error[current]);
        current = successor[current];
      }
      auto dst = slot(x, i);
      std::copy(cloud.point(current).begin(), cloud.point(current).end(), dst.begin());
    }
  }
  return table;
}

double covering_radius(const QuasiMetric& e, const PointCloud& cloud) {
  const QuasiMetric m = symmetrize_max(e);
  std::vector<double> nearest(cloud.size(), 0.0);
  parallel_for(cloud.size(), [&](std::size_t x) {
    double best = std::numeric_limits<double>::infinity();
    for (PointId y = 0; y < cloud.size(); ++y) {
      if (y != x) best = std::min(best, m(cloud.point(x), cloud.point(y)));
    }
    nearest[x] = std::isfinite(best) ? best : 0.0;
  });
  return *std::max_element(nearest.begin(), nearest.end());
}

}  // namespace qme
