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

#include "qme/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace qme {

PointCloud::PointCloud(CloudKind kind, std::size_t dim, std::vector<double> coords)
    : kind_(kind), dim_(dim), size_(dim == 0 ? 0 : coords.size() / dim), coords_(std::move(coords)) {
  if (size_ == 0) throw Error("point cloud is empty");
}

PointCloud PointCloud::grid_1d(double lo, double hi, std::size_t count) {
  if (count == 0) throw Error("grid_1d: count must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw Error("grid_1d: need finite lo < hi");
  }
  std::vector<double> coords(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    coords[i] = snap_to_lattice(i + 1 == count && count > 1 ? hi : lo + (hi - lo) * t);
  }
  PointCloud cloud(CloudKind::Grid1D, 1, std::move(coords));
  cloud.lo_ = lo;
  cloud.hi_ = hi;
  cloud.RejectDuplicates();
  return cloud;
}

PointCloud PointCloud::circle_grid(std::size_t count) {
  if (count == 0) throw Error("circle_grid: count must be positive");
  std::vector<double> coords(count);
  for (std::size_t k = 0; k < count; ++k) {
    coords[k] = snap_to_lattice(static_cast<double>(k) / static_cast<double>(count));
  }
  PointCloud cloud(CloudKind::CircleGrid, 1, std::move(coords));
  cloud.lo_ = 0.0;
  cloud.hi_ = 1.0;
  cloud.RejectDuplicates();
  return cloud;
}

PointCloud PointCloud::symbol_blocks(unsigned alphabet, unsigned length) {
  if (alphabet < 2 || length == 0) throw Error("symbol_blocks: need alphabet >= 2 and length >= 1");
  const double total = std::pow(static_cast<double>(alphabet), static_cast<double>(length));
  if (total > 1 << 22) throw Error("symbol_blocks: too many blocks");
  const std::size_t count = static_cast<std::size_t>(total);
  std::vector<double> coords(count * length);
  for (std::size_t id = 0; id < count; ++id) {
    std::size_t v = id;
    for (unsigned j = length; j-- > 0;) {
      coords[id * length + j] = static_cast<double>(v % alphabet);
      v /= alphabet;
    }
  }
  PointCloud cloud(CloudKind::SymbolBlocks, length, std::move(coords));
  cloud.alphabet_ = alphabet;
  cloud.block_length_ = length;
  return cloud;
}

PointCloud PointCloud::custom(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw Error("point cloud is empty");
  const std::size_t dim = points.front().size();
  if (dim == 0) throw Error("custom cloud: points must have at least one coordinate");
  std::vector<double> coords;
  coords.reserve(points.size() * dim);
  for (const auto& p : points) {
    if (p.size() != dim) throw Error("custom cloud: ragged coordinate rows");
    for (double c : p) {
      if (!std::isfinite(c)) throw Error("custom cloud: non-finite coordinate");
      coords.push_back(c);
    }
  }
  PointCloud cloud(CloudKind::Custom, dim, std::move(coords));
  cloud.RejectDuplicates();
  return cloud;
}

PointCloud PointCloud::indices(std::size_t n) {
  if (n == 0) throw Error("point cloud is empty");
  std::vector<double> coords(n);
  std::iota(coords.begin(), coords.end(), 0.0);
  return PointCloud(CloudKind::Custom, 1, std::move(coords));
}

void PointCloud::RejectDuplicates() const {
  std::vector<PointId> order(size_);
  std::iota(order.begin(), order.end(), PointId{0});
  auto less = [&](PointId a, PointId b) {
    auto pa = point(a);
    auto pb = point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t k = 1; k < order.size(); ++k) {
    auto pa = point(order[k - 1]);
    auto pb = point(order[k]);
    if (std::equal(pa.begin(), pa.end(), pb.begin())) {
      std::ostringstream msg;
      msg << "point cloud has duplicate coordinates at ids " << std::min(order[k - 1], order[k])
          << " and " << std::max(order[k - 1], order[k]);
      throw Error(msg.str());
    }
  }
}

std::string PointCloud::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case CloudKind::Grid1D:
      out << "Grid1D(" << format_real(lo_) << ", " << format_real(hi_) << ", " << size_ << ")";
      break;
    case CloudKind::CircleGrid:
      out << "CircleGrid(" << size_ << ")";
      break;
    case CloudKind::SymbolBlocks:
      out << "SymbolBlocks(" << alphabet_ << ", " << block_length_ << ")";
      break;
    case CloudKind::Custom:
      out << "Custom(" << size_ << " points, dim " << dim_ << ")";
      break;
  }
  return out.str();
}

PointCloud load_cloud_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open cloud file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::vector<double> row;
    std::string token;
    bool numeric = true;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(token, &used));
        if (used != token.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw Error("cloud file " + path + ": malformed row '" + line + "'");
    }
    first = false;
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return PointCloud::custom(rows);
}

}  // namespace qme
