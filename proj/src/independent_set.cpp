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

// Maximum separated sets: maximum independent sets of the cover relation,
// solved as maximum cliques of the separation relation.

#include <algorithm>
#include <numeric>

#include "qme/covering.hpp"

namespace qme {
namespace {

// Branch-and-bound with greedy colouring bounds. Vertices are renumbered by
// non-increasing degree so that bitset order matches the colouring order.
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bitset>& adjacency, const std::vector<PointId>& incumbent)
      : n_(adjacency.size()), order_(n_), rank_(n_) {
    std::vector<std::size_t> degree(n_);
    for (PointId v = 0; v < n_; ++v) degree[v] = adjacency[v].count();
    std::iota(order_.begin(), order_.end(), PointId{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](PointId a, PointId b) { return degree[a] > degree[b]; });
    for (std::size_t r = 0; r < n_; ++r) rank_[order_[r]] = r;
    adj_.assign(n_, Bitset(n_));
    for (PointId v = 0; v < n_; ++v) {
      adjacency[v].for_each([&](std::size_t u) { adj_[rank_[v]].set(rank_[u]); });
    }
    for (PointId v : incumbent) best_.push_back(rank_[v]);
  }

  void Run() {
    std::vector<std::size_t> clique;
    Expand(clique, Bitset(n_, true));
  }

  std::vector<PointId> best() const {
    std::vector<PointId> out;
    for (std::size_t r : best_) out.push_back(order_[r]);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void Expand(std::vector<std::size_t>& clique, Bitset candidates) {
    ++nodes_;
    std::vector<std::pair<std::size_t, std::size_t>> coloured;  // (vertex, colour)
    Bitset uncoloured = candidates;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset available = uncoloured;
      for (std::size_t v = available.find_first(); v != Bitset::npos; v = available.find_next(v)) {
        uncoloured.reset(v);
        available.subtract(adj_[v]);
        coloured.push_back({v, colour});
      }
    }
    for (auto it = coloured.rbegin(); it != coloured.rend(); ++it) {
      const auto [v, c] = *it;
      if (clique.size() + c <= best_.size()) return;
      clique.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (clique.size() > best_.size()) best_ = clique;
      } else {
        Expand(clique, std::move(next));
      }
      clique.pop_back();
      candidates.reset(v);
    }
  }

  std::size_t n_;
  std::vector<PointId> order_;
  std::vector<std::size_t> rank_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

std::vector<PointId> GreedySeparatedIds(const std::vector<Bitset>& cover) {
  const std::size_t n = cover.size();
  Bitset blocked(n);
  std::vector<PointId> chosen;
  for (PointId x = 0; x < n; ++x) {
    if (blocked.test(x)) continue;
    chosen.push_back(x);
    blocked |= cover[x];
  }
  return chosen;
}

std::vector<Bitset> CoverFromSeparation(const std::vector<Bitset>& separation) {
  std::vector<Bitset> cover = separation;
  for (PointId x = 0; x < cover.size(); ++x) cover[x].flip();
  return cover;
}

}  // namespace

SeparatedResult greedy_separated(const std::vector<Bitset>& cover) {
  SeparatedResult r;
  r.witness = GreedySeparatedIds(cover);
  r.cardinality = r.witness.size();
  r.method = SolverMethod::Greedy;
  r.optimal = false;
  return r;
}

SeparatedResult exact_separated(const std::vector<Bitset>& separation) {
  SeparatedResult r;
  r.method = SolverMethod::ExactBnB;
  r.optimal = true;
  if (separation.empty()) return r;
  CliqueSearch search(separation, GreedySeparatedIds(CoverFromSeparation(separation)));
  search.Run();
  r.witness = search.best();
  r.cardinality = r.witness.size();
  r.nodes = search.nodes();
  return r;
}

SeparatedResult max_separated(const RelationGraph& graph, const SolverOptions& options) {
  const bool exact = options.mode == SolveMode::Exact ||
                     (options.mode == SolveMode::Auto && graph.size() <= options.exact_threshold);
  return exact ? exact_separated(graph.separation) : greedy_separated(graph.cover);
}

}  // namespace qme
