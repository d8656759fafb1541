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

#ifndef QME_COVERING_HPP_
#define QME_COVERING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qme/bitset.hpp"
#include "qme/dynamics.hpp"
#include "qme/quasimetric.hpp"

namespace qme {

// SymAnd pairs two-sided spanning with OR-separation (r', s').
// AsymOr pairs one-sided spanning with AND-separation (r'', s'').
enum class Variant { SymAnd, AsymOr };

std::string to_string(Variant v);

// e_n(x, y) for every ordered pair of orbit-table points, advanced in n.
class BowenMatrix {
 public:
  BowenMatrix(const QuasiMetric& e, const OrbitTable& orbits);

  // Folds iterates up to n - 1 into the running maximum; n never decreases.
  void advance_to(std::size_t n);
  std::size_t n() const { return n_; }
  std::size_t size() const { return size_; }
  double at(PointId x, PointId y) const { return values_[x * size_ + y]; }

 private:
  const QuasiMetric* metric_;
  const OrbitTable* orbits_;
  std::size_t size_;
  std::size_t n_ = 0;
  std::vector<double> values_;
};

struct RelationGraph {
  std::size_t n = 1;
  double epsilon = 0.0;
  Variant variant = Variant::SymAnd;
  // cover[x].test(y): y covers x. Symmetric, with a true diagonal.
  std::vector<Bitset> cover;
  // separation[x].test(y): x and y are separated; the off-diagonal complement
  // of cover.
  std::vector<Bitset> separation;

  std::size_t size() const { return cover.size(); }
  friend bool operator==(const RelationGraph&, const RelationGraph&) = default;
};

RelationGraph build_relation(const QuasiMetric& e, const OrbitTable& orbits,
                             std::size_t n, double epsilon, Variant variant);
RelationGraph build_relation(const BowenMatrix& bowen, double epsilon, Variant variant);

enum class SolveMode { Exact, Greedy, Auto };
enum class SolverMethod { ExactBnB, Greedy };

std::string to_string(SolverMethod m);

struct SolverOptions {
  SolveMode mode = SolveMode::Auto;
  // Auto runs the exact solver on relations with at most this many points.
  std::size_t exact_threshold = 64;
};

struct CoverResult {
  std::size_t cardinality = 0;
  std::vector<PointId> witness;  // ascending
  SolverMethod method = SolverMethod::Greedy;
  bool optimal = false;
  std::uint64_t nodes = 0;  // branch-and-bound nodes, 0 for greedy
};

struct SeparatedResult {
  std::size_t cardinality = 0;
  std::vector<PointId> witness;  // ascending
  SolverMethod method = SolverMethod::Greedy;
  bool optimal = false;
  std::uint64_t nodes = 0;
};

CoverResult min_spanning(const RelationGraph& graph, const SolverOptions& options = {});
SeparatedResult max_separated(const RelationGraph& graph, const SolverOptions& options = {});

// Solver entry points on raw rows. `cover` must be symmetric with a true
// diagonal; `separation` its off-diagonal complement.
CoverResult greedy_cover(const std::vector<Bitset>& cover);
CoverResult exact_cover(const std::vector<Bitset>& cover);
SeparatedResult greedy_separated(const std::vector<Bitset>& cover);
SeparatedResult exact_separated(const std::vector<Bitset>& separation);

bool is_spanning(const RelationGraph& graph, std::span<const PointId> set);
bool is_separated(const RelationGraph& graph, std::span<const PointId> set);

struct CountCell {
  std::size_t n = 1;
  double epsilon = 0.0;
  Variant variant = Variant::SymAnd;
  CoverResult spanning;
  SeparatedResult separated;

  bool exact() const { return spanning.optimal && separated.optimal; }
};

struct CountGridOptions {
  SolverOptions solver;
  std::vector<Variant> variants{Variant::SymAnd, Variant::AsymOr};
};

// Spanning and separated counts for every (n, epsilon, variant).
struct CountGrid {
  std::vector<std::size_t> n_list;
  std::vector<double> epsilon_list;
  std::vector<Variant> variants;
  std::size_t cloud_size = 0;
  std::string metric;
  // Ordered by n, then epsilon (as listed), then variant.
  std::vector<CountCell> cells;
  // Monotonicity notes: counts should not decrease as epsilon shrinks or as
  // n grows.
  std::vector<std::string> diagnostics;

  const CountCell* find(std::size_t n, double epsilon, Variant variant) const;
  // Throws Error when the cell is absent.
  const CountCell& at(std::size_t n, double epsilon, Variant variant) const;
};

// n_list strictly increasing and positive, epsilon_list strictly decreasing
// and positive; max(n_list) <= orbits.n_max().
CountGrid count_grid(const QuasiMetric& e, const OrbitTable& orbits,
                     std::span<const std::size_t> n_list,
                     std::span<const double> epsilon_list,
                     const CountGridOptions& options = {});

// Flat CSV: n,epsilon,variant,quantity,cardinality,method,optimal.
std::string count_grid_csv(const CountGrid& grid);

}  // namespace qme

#endif  // QME_COVERING_HPP_
