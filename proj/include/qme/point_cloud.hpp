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

#ifndef QME_POINT_CLOUD_HPP_
#define QME_POINT_CLOUD_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qme/common.hpp"

namespace qme {

enum class CloudKind { Grid1D, CircleGrid, SymbolBlocks, Custom };

// A finite sample of a compact set. Points are real vectors of a common
// dimension, stored row-major, and pairwise distinct.
class PointCloud {
 public:
  // `count` evenly spaced points on [lo, hi], ascending.
  static PointCloud grid_1d(double lo, double hi, std::size_t count);
  // Points k/count, k = 0..count-1, on the unit circle [0, 1).
  static PointCloud circle_grid(std::size_t count);
  // All alphabet^length blocks in lexicographic order; block id is the
  // base-`alphabet` value with the first symbol most significant.
  static PointCloud symbol_blocks(unsigned alphabet, unsigned length);
  // User-supplied points; rejects empty input, ragged rows, non-finite
  // coordinates and duplicated points.
  static PointCloud custom(const std::vector<std::vector<double>>& points);
  // One-dimensional index cloud {0, 1, ..., n-1} for matrix-backed metrics.
  static PointCloud indices(std::size_t n);

  std::size_t size() const { return size_; }
  std::size_t dim() const { return dim_; }
  CloudKind kind() const { return kind_; }
  bool empty() const { return size_ == 0; }

  std::span<const double> point(PointId id) const {
    return {coords_.data() + id * dim_, dim_};
  }
  const std::vector<double>& coordinates() const { return coords_; }

  // Grid1D parameters (lo, hi); CircleGrid/Grid1D count; SymbolBlocks (k, L).
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  unsigned alphabet() const { return alphabet_; }
  unsigned block_length() const { return block_length_; }

  std::string describe() const;

 private:
  PointCloud(CloudKind kind, std::size_t dim, std::vector<double> coords);
  void RejectDuplicates() const;

  CloudKind kind_ = CloudKind::Custom;
  std::size_t dim_ = 0;
  std::size_t size_ = 0;
  std::vector<double> coords_;
  double lo_ = 0.0;
  double hi_ = 0.0;
  unsigned alphabet_ = 0;
  unsigned block_length_ = 0;
};

// Reads whitespace- or comma-separated coordinate rows. A first line that does
// not parse as numbers is treated as a header and skipped.
PointCloud load_cloud_csv(const std::string& path);

}  // namespace qme

#endif  // QME_POINT_CLOUD_HPP_
