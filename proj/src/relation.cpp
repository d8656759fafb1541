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

#include <algorithm>

#include "qme/covering.hpp"
#include "qme/parallel.hpp"

namespace qme {
namespace {

constexpr std::size_t kTile = 64;

}  // namespace

std::string to_string(Variant v) { return v == Variant::SymAnd ? "SymAND" : "AsymOR"; }

BowenMatrix::BowenMatrix(const QuasiMetric& e, const OrbitTable& orbits)
    : metric_(&e), orbits_(&orbits), size_(orbits.size()), values_(size_ * size_, 0.0) {}

void BowenMatrix::advance_to(std::size_t n) {
  if (n > orbits_->n_max()) {
    throw Error("bowen matrix: n=" + std::to_string(n) + " exceeds orbit length " +
                std::to_string(orbits_->n_max()));
  }
  for (std::size_t i = n_; i < n; ++i) {
    parallel_for(size_, [&](std::size_t x) {
      double* row = values_.data() + x * size_;
      const auto xi = orbits_->image(x, i);
      for (PointId y = 0; y < size_; ++y) {
        row[y] = std::max(row[y], (*metric_)(xi, orbits_->image(y, i)));
      }
    });
  }
  n_ = std::max(n_, n);
}

RelationGraph build_relation(const BowenMatrix& bowen, double epsilon, Variant variant) {
  if (!(epsilon > 0.0)) throw Error("build_relation: epsilon must be positive");
  if (bowen.n() == 0) throw Error("build_relation: bowen matrix not advanced");
  const std::size_t size = bowen.size();
  RelationGraph g;
  g.n = bowen.n();
  g.epsilon = epsilon;
  g.variant = variant;
  g.cover.assign(size, Bitset(size));
  g.separation.assign(size, Bitset(size));
  const std::size_t blocks = (size + kTile - 1) / kTile;
  // Each task owns one band of rows, so no two tasks touch the same row.
  parallel_for(blocks, [&](std::size_t bx) {
    const std::size_t x_end = std::min(size, (bx + 1) * kTile);
    for (std::size_t y0 = 0; y0 < size; y0 += kTile) {
      const std::size_t y_end = std::min(size, y0 + kTile);
      for (PointId x = bx * kTile; x < x_end; ++x) {
        Bitset& row = g.cover[x];
        for (PointId y = y0; y < y_end; ++y) {
          const double xy = bowen.at(x, y);
          const double yx = bowen.at(y, x);
          const bool covered = variant == Variant::SymAnd ? (xy <= epsilon && yx <= epsilon)
                                                          : (xy <= epsilon || yx <= epsilon);
          if (covered || x == y) row.set(y);
        }
      }
    }
    for (PointId x = bx * kTile; x < x_end; ++x) {
      g.separation[x] = g.cover[x];
      g.separation[x].flip();
      g.separation[x].reset(x);
    }
  });
  return g;
}

RelationGraph build_relation(const QuasiMetric& e, const OrbitTable& orbits, std::size_t n,
                             double epsilon, Variant variant) {
  if (n < 1 || n > orbits.n_max()) {
    throw Error("build_relation: n=" + std::to_string(n) + " outside [1, " +
                std::to_string(orbits.n_max()) + "]");
  }
  BowenMatrix bowen(e, orbits);
  bowen.advance_to(n);
  return build_relation(bowen, epsilon, variant);
}

bool is_spanning(const RelationGraph& graph, std::span<const PointId> set) {
  Bitset members(graph.size());
  for (PointId y : set) {
    if (y >= graph.size()) return false;
    members.set(y);
  }
  for (const Bitset& row : graph.cover) {
    if (!row.intersects(members)) return false;
  }
  return true;
}

bool is_separated(const RelationGraph& graph, std::span<const PointId> set) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    if (set[a] >= graph.size()) return false;
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (set[a] == set[b] || !graph.separation[set[a]].test(set[b])) return false;
    }
  }
  return true;
}

}  // namespace qme
