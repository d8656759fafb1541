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

#include <doctest.h>

#include <vector>

#include "qme/dynamics.hpp"

using qme::MapKind;
using qme::MapSpec;
using qme::PointCloud;
using qme::QuasiMetric;
using qme::SnapMode;

namespace {

double Apply1(const MapSpec& t, double x) {
  double v[] = {x};
  t.apply(v);
  return v[0];
}

}  // namespace

TEST_CASE("single-coordinate maps") {
  CHECK(Apply1(MapSpec::doubling(), 0.75) == 0.5);
  CHECK(Apply1(MapSpec::doubling(), 0.5) == 0.0);
  CHECK(Apply1(MapSpec::tent(2), 0.25) == 0.5);
  CHECK(Apply1(MapSpec::tent(2), 0.75) == 0.5);
  CHECK(Apply1(MapSpec::tent(1), 0.5) == 0.5);
  CHECK(Apply1(MapSpec::logistic(4), 0.5) == 1.0);
  CHECK(Apply1(MapSpec::affine(2, 1), 0.5) == 2.0);
  CHECK(Apply1(MapSpec::identity(), 0.3) == 0.3);
  CHECK_THROWS_AS(Apply1(MapSpec::tent(2), 1.5), qme::Error);
  CHECK_THROWS_AS(Apply1(MapSpec::logistic(4), -0.25), qme::Error);
  CHECK_THROWS_AS(MapSpec::tent(2.5), qme::Error);
  CHECK_THROWS_AS(MapSpec::logistic(0), qme::Error);
}

TEST_CASE("left shift on blocks") {
  std::vector<double> w = {0, 1, 1, 0};
  MapSpec::shift_left().apply(w);
  CHECK(w == std::vector<double>{1, 1, 0, 0});
  iterate_map(MapSpec::shift_left(), 2).apply(w);
  CHECK(w == std::vector<double>{0, 0, 0, 0});
}

TEST_CASE("iterate_map composes in closed form") {
  const MapSpec d3 = iterate_map(MapSpec::doubling(), 3);
  CHECK(d3.kind() == MapKind::Doubling);
  CHECK(d3.multiplier() == 8);
  CHECK(Apply1(d3, 0.375) == 0.0);
  CHECK(Apply1(d3, 0.0625) == 0.5);

  CHECK(iterate_map(MapSpec::shift_left(), 3).shift() == 3);

  const MapSpec a2 = iterate_map(MapSpec::affine(2, 1), 2);
  CHECK(a2.a() == 4.0);
  CHECK(a2.b() == 3.0);

  const MapSpec t2 = iterate_map(MapSpec::tent(2), 2);
  CHECK(t2.repeat() == 2);
  CHECK(Apply1(t2, 0.125) == 0.5);
  CHECK(iterate_map(t2, 3).repeat() == 6);

  CHECK(iterate_map(MapSpec::identity(), 5) == MapSpec::identity());
  CHECK_THROWS_AS(iterate_map(MapSpec::doubling(), 0), qme::Error);
  CHECK_THROWS_AS(iterate_map(MapSpec::doubling(), 60), qme::Error);
}

TEST_CASE("property: iterate_map agrees with repeated application") {
  const std::vector<MapSpec> maps = {MapSpec::doubling(), MapSpec::tent(2), MapSpec::tent(1.5),
                                     MapSpec::logistic(3.5), MapSpec::affine(0.5, 0.25)};
  for (const MapSpec& t : maps) {
    for (std::size_t m = 1; m <= 4; ++m) {
      const MapSpec tm = iterate_map(t, m);
      for (int k = 0; k <= 16; ++k) {
        double x = k / 16.0;
        const double once = Apply1(tm, x);
        for (std::size_t i = 0; i < m; ++i) x = Apply1(t, x);
        CHECK(once == doctest::Approx(x).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("uniform continuity declaration") {
  CHECK(MapSpec::doubling().declared_uniformly_continuous());
  const MapSpec t = MapSpec::doubling().with_uniform_continuity(false);
  CHECK_FALSE(t.declared_uniformly_continuous());
  CHECK_FALSE(iterate_map(t, 2).declared_uniformly_continuous());
}

TEST_CASE("orbit of the doubling map on an 8-point circle") {
  const PointCloud cloud = PointCloud::circle_grid(8);
  const auto orbits = qme::build_orbits(MapSpec::doubling(), cloud, 4);
  CHECK(orbits.n_max() == 4);
  CHECK(orbits.image(1, 0)[0] == 0.125);
  CHECK(orbits.image(1, 1)[0] == 0.25);
  CHECK(orbits.image(1, 2)[0] == 0.5);
  CHECK(orbits.image(1, 3)[0] == 0.0);
  CHECK(orbits.image(3, 1)[0] == 0.75);
  CHECK(orbits.max_snap_error() == 0.0);
}

TEST_CASE("orbits of the shift on symbol blocks") {
  const PointCloud cloud = PointCloud::symbol_blocks(2, 4);
  REQUIRE(cloud.size() == 16);
  // lexicographic order: id 6 is 0110
  CHECK(std::vector<double>(cloud.point(6).begin(), cloud.point(6).end()) == std::vector<double>{0, 1, 1, 0});
  const auto orbits = qme::build_orbits(MapSpec::shift_left(), cloud, 3);
  const auto img = orbits.image(6, 1);
  CHECK(std::vector<double>(img.begin(), img.end()) == std::vector<double>{1, 1, 0, 0});
}

TEST_CASE("nearest-neighbour snapping") {
  const PointCloud cloud = PointCloud::custom({{0.0}, {0.25}, {0.5}, {0.75}});
  const QuasiMetric arc = QuasiMetric::circle_arc();
  // tent(1.5): 0.25 -> 0.375, equidistant from 0.25 and 0.5, ties to the lower id
  const auto orbits = qme::build_orbits(MapSpec::tent(1.5), cloud, 3, SnapMode::NearestNeighbor, &arc);
  CHECK(orbits.snap_mode() == SnapMode::NearestNeighbor);
  CHECK(orbits.image(1, 1)[0] == 0.25);
  CHECK(orbits.image(1, 2)[0] == 0.25);
  // 0.5 -> 0.75 exactly
  CHECK(orbits.image(2, 1)[0] == 0.75);
  CHECK(orbits.max_snap_error() == 0.125);
  CHECK_THROWS_AS(qme::build_orbits(MapSpec::tent(1.5), cloud, 3, SnapMode::NearestNeighbor), qme::Error);
  CHECK_THROWS_AS(qme::build_orbits(MapSpec::tent(1.5), cloud, 0), qme::Error);
}

TEST_CASE("covering radius under the max symmetrization") {
  CHECK(qme::covering_radius(QuasiMetric::euclidean(), PointCloud::grid_1d(0, 1, 5)) == 0.25);
  // every off-diagonal pair has one direction equal to 1
  CHECK(qme::covering_radius(QuasiMetric::example1_line(), PointCloud::grid_1d(0, 1, 5)) == 1.0);
  CHECK(qme::covering_radius(QuasiMetric::circle_arc(), PointCloud::circle_grid(16)) == 0.0625);
}

TEST_CASE("lattice-snapped grids keep exact spacing") {
  const PointCloud cloud = PointCloud::grid_1d(0, 1, 201);
  CHECK(cloud.point(0)[0] == 0.0);
  CHECK(cloud.point(200)[0] == 1.0);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    CHECK(cloud.point(i)[0] == qme::snap_to_lattice(cloud.point(i)[0]));
  }
  CHECK_THROWS_AS(PointCloud::custom({{0.0}, {0.0}}), qme::Error);
  CHECK_THROWS_AS(PointCloud::custom({{0.0}, {1.0, 2.0}}), qme::Error);
  CHECK_THROWS_AS(PointCloud::custom({}), qme::Error);
}
