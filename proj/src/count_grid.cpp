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
#include <sstream>

#include "qme/covering.hpp"
#include "qme/parallel.hpp"

namespace qme {
namespace {

std::string QuantityLabel(Variant v, bool spanning) {
  if (v == Variant::SymAnd) return spanning ? "r1" : "s1";
  return spanning ? "r2" : "s2";
}

void AddMonotonicityNotes(CountGrid& grid) {
  for (Variant v : grid.variants) {
    for (bool spanning : {true, false}) {
      auto value = [&](std::size_t n, double eps) {
        const CountCell& c = grid.at(n, eps, v);
        return spanning ? c.spanning.cardinality : c.separated.cardinality;
      };
      const std::string label = QuantityLabel(v, spanning);
      for (std::size_t n : grid.n_list) {
        for (std::size_t k = 1; k < grid.epsilon_list.size(); ++k) {
          const double coarse = grid.epsilon_list[k - 1];
          const double fine = grid.epsilon_list[k];
          if (value(n, fine) < value(n, coarse)) {
            grid.diagnostics.push_back(label + " decreases as epsilon shrinks at n=" + std::to_string(n) +
                                       ", epsilon " + format_real(coarse) + " -> " + format_real(fine));
          }
        }
      }
      for (double eps : grid.epsilon_list) {
        for (std::size_t k = 1; k < grid.n_list.size(); ++k) {
          if (value(grid.n_list[k], eps) < value(grid.n_list[k - 1], eps)) {
            grid.diagnostics.push_back(label + " decreases in n at epsilon=" + format_real(eps) + ", n " +
                                       std::to_string(grid.n_list[k - 1]) + " -> " +
                                       std::to_string(grid.n_list[k]));
          }
        }
      }
    }
  }
}

}  // namespace

const CountCell* CountGrid::find(std::size_t n, double epsilon, Variant variant) const {
  for (const CountCell& c : cells) {
    if (c.n == n && c.epsilon == epsilon && c.variant == variant) return &c;
  }
  return nullptr;
}

const CountCell& CountGrid::at(std::size_t n, double epsilon, Variant variant) const {
  const CountCell* c = find(n, epsilon, variant);
  if (c == nullptr) {
    throw Error("count grid: no cell for n=" + std::to_string(n) + ", epsilon=" + format_real(epsilon) +
                ", variant=" + to_string(variant));
  }
  return *c;
}

CountGrid count_grid(const QuasiMetric& e, const OrbitTable& orbits,
                     std::span<const std::size_t> n_list, std::span<const double> epsilon_list,
                     const CountGridOptions& options) {
  if (n_list.empty() || epsilon_list.empty()) throw Error("count grid: empty schedule");
  if (options.variants.empty()) throw Error("count grid: no variants requested");
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    if (n_list[k] < 1 || (k > 0 && n_list[k] <= n_list[k - 1])) {
      throw Error("count grid: n list must be strictly increasing positive integers");
    }
  }
  for (std::size_t k = 0; k < epsilon_list.size(); ++k) {
    if (!(epsilon_list[k] > 0.0) || (k > 0 && epsilon_list[k] >= epsilon_list[k - 1])) {
      throw Error("count grid: epsilon list must be strictly decreasing and positive");
    }
  }
  if (n_list.back() > orbits.n_max()) {
    throw Error("count grid: n=" + std::to_string(n_list.back()) + " exceeds orbit length " +
                std::to_string(orbits.n_max()));
  }

  CountGrid grid;
  grid.n_list.assign(n_list.begin(), n_list.end());
  grid.epsilon_list.assign(epsilon_list.begin(), epsilon_list.end());
  grid.variants = options.variants;
  grid.cloud_size = orbits.size();
  grid.metric = e.description();

  BowenMatrix bowen(e, orbits);
  const std::size_t per_n = epsilon_list.size() * options.variants.size();
  grid.cells.resize(n_list.size() * per_n);
  for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
    bowen.advance_to(n_list[ni]);
    parallel_for(per_n, [&](std::size_t k) {
      const double eps = epsilon_list[k / options.variants.size()];
      const Variant v = options.variants[k % options.variants.size()];
      const RelationGraph g = build_relation(bowen, eps, v);
      CountCell& cell = grid.cells[ni * per_n + k];
      cell.n = n_list[ni];
      cell.epsilon = eps;
      cell.variant = v;
      cell.spanning = min_spanning(g, options.solver);
      cell.separated = max_separated(g, options.solver);
    });
  }
  AddMonotonicityNotes(grid);
  return grid;
}

std::string count_grid_csv(const CountGrid& grid) {
  std::ostringstream out;
  out << "n,epsilon,variant,quantity,cardinality,method,optimal\n";
  for (const CountCell& c : grid.cells) {
    const std::string prefix = std::to_string(c.n) + "," + format_real(c.epsilon) + "," + to_string(c.variant) + ",";
    out << prefix << QuantityLabel(c.variant, true) << "," << c.spanning.cardinality << ","
        << to_string(c.spanning.method) << "," << (c.spanning.optimal ? "true" : "false") << "\n";
    out << prefix << QuantityLabel(c.variant, false) << "," << c.separated.cardinality << ","
        << to_string(c.separated.method) << "," << (c.separated.optimal ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace qme
