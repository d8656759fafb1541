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

// Minimum spanning sets as set cover: element x is covered by any y with
// cover[x].test(y).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <utility>

#include "qme/covering.hpp"

namespace qme {
namespace {

// covers[y] = {x : cover[x].test(y)}.
std::vector<Bitset> Transpose(const std::vector<Bitset>& cover) {
  const std::size_t n = cover.size();
  std::vector<Bitset> t(n, Bitset(n));
  for (PointId x = 0; x < n; ++x) {
    cover[x].for_each([&](std::size_t y) { t[y].set(x); });
  }
  return t;
}

std::vector<PointId> GreedyCoverIds(const std::vector<Bitset>& covers, std::size_t n) {
  // Lazy max-heap on (gain, -id): gains only shrink, so an entry whose
  // recomputed gain is unchanged is still the true maximum.
  using Entry = std::pair<std::size_t, std::ptrdiff_t>;
  std::priority_queue<Entry> heap;
  for (PointId y = 0; y < n; ++y) {
    heap.push({covers[y].count(), -static_cast<std::ptrdiff_t>(y)});
  }
  Bitset uncovered(n, true);
  std::size_t remaining = n;
  std::vector<PointId> chosen;
  while (remaining > 0 && !heap.empty()) {
    const auto [gain, neg_id] = heap.top();
    heap.pop();
    const auto y = static_cast<PointId>(-neg_id);
    const std::size_t fresh = covers[y].and_count(uncovered);
    if (fresh == 0) continue;
    if (fresh < gain) {
      heap.push({fresh, neg_id});
      continue;
    }
    chosen.push_back(y);
    uncovered.subtract(covers[y]);
    remaining -= fresh;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

class CoverSearch {
 public:
  CoverSearch(const std::vector<Bitset>& cover, std::vector<PointId> incumbent)
      : coverers_(cover),
        covers_(Transpose(cover)),
        n_(cover.size()),
        best_(std::move(incumbent)),
        gain_(n_, 0),
        lambda_(n_, 0.0) {
    for (PointId x = 0; x < n_; ++x) lambda_[x] = 1.0 / static_cast<double>(cover[x].count());
  }

  void Run() {
    Bitset uncovered(n_, true);
    Bitset allowed(n_, true);
    Search(uncovered, allowed);
    std::sort(best_.begin(), best_.end());
  }

  const std::vector<PointId>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Max of two bounds: a packing of uncovered elements whose candidate
  // coverer sets are pairwise disjoint (each needs its own set), and the
  // fractional bound sum_x 1/g(x), g(x) = best gain among x's coverers. A
  // chosen set S adds at most |S & uncovered| / |S & uncovered| = 1 to it.
  std::size_t LowerBound(const Bitset& uncovered, const Bitset& allowed,
                         const std::vector<std::pair<std::size_t, PointId>>& by_options) {
    Bitset used(n_);
    std::size_t packing = 0;
    for (const auto& [options, x] : by_options) {
      Bitset cand = coverers_[x] & allowed;
      if (!cand.intersects(used)) {
        ++packing;
        used |= cand;
      }
    }
    allowed.for_each([&](std::size_t y) { gain_[y] = covers_[y].and_count(uncovered); });
    double fractional = 0.0;
    for (const auto& [options, x] : by_options) {
      std::size_t best = 0;
      coverers_[x].for_each([&](std::size_t y) {
        if (allowed.test(y)) best = std::max(best, gain_[y]);
      });
      fractional += 1.0 / static_cast<double>(best);
    }
    const auto frac = static_cast<std::size_t>(std::ceil(fractional - 1e-9));
    return std::max(packing, frac);
  }

  // Lagrangian relaxation of the covering constraints, maximized by
  // subgradient steps. Any multipliers give a valid bound; they are kept
  // between nodes as a warm start. Returns early once `target` is reached.
  std::size_t LagrangianBound(const Bitset& uncovered, const Bitset& allowed, std::size_t target) {
    std::vector<PointId> elems = uncovered.to_indices();
    std::vector<std::vector<std::uint32_t>> sets;
    std::vector<std::uint32_t> local(n_, 0);
    for (std::size_t k = 0; k < elems.size(); ++k) local[elems[k]] = static_cast<std::uint32_t>(k);
    allowed.for_each([&](std::size_t y) {
      std::vector<std::uint32_t> members;
      (covers_[y] & uncovered).for_each([&](std::size_t x) { members.push_back(local[x]); });
      if (!members.empty()) sets.push_back(std::move(members));
    });
    std::vector<double> lambda(elems.size());
    for (std::size_t k = 0; k < elems.size(); ++k) lambda[k] = lambda_[elems[k]];
    std::vector<int> hits(elems.size());
    double best = 0.0;
    double mu = 2.0;
    int stale = 0;
    for (int iter = 0; iter < 150 && mu > 0.005; ++iter) {
      double value = 0.0;
      for (double l : lambda) value += l;
      std::fill(hits.begin(), hits.end(), 0);
      for (const auto& members : sets) {
        double reduced = 1.0;
        for (std::uint32_t k : members) reduced -= lambda[k];
        if (reduced < 0.0) {
          value += reduced;
          for (std::uint32_t k : members) ++hits[k];
        }
      }
      if (value > best + 1e-9) {
        best = value;
        stale = 0;
        for (std::size_t k = 0; k < elems.size(); ++k) lambda_[elems[k]] = lambda[k];
      } else if (++stale >= 5) {
        mu /= 2;
        stale = 0;
      }
      if (std::ceil(best - 1e-6) >= static_cast<double>(target)) break;
      double norm = 0.0;
      for (int h : hits) norm += static_cast<double>((1 - h) * (1 - h));
      if (norm == 0.0) break;
      const double step = mu * (static_cast<double>(target) - value) / norm;
      for (std::size_t k = 0; k < elems.size(); ++k) {
        lambda[k] = std::max(0.0, lambda[k] + step * static_cast<double>(1 - hits[k]));
      }
    }
    return static_cast<std::size_t>(std::max(0.0, std::ceil(best - 1e-6)));
  }

  void Search(const Bitset& uncovered, Bitset allowed) {
    ++nodes_;
    if (uncovered.none()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;

    std::vector<std::pair<std::size_t, PointId>> by_options;
    by_options.reserve(uncovered.count());
    uncovered.for_each([&](std::size_t x) {
      by_options.push_back({coverers_[x].and_count(allowed), static_cast<PointId>(x)});
    });
    std::sort(by_options.begin(), by_options.end());
    if (by_options.front().first == 0) return;
    if (chosen_.size() + LowerBound(uncovered, allowed, by_options) >= best_.size()) return;
    const std::size_t budget = best_.size() - chosen_.size();
    if (LagrangianBound(uncovered, allowed, budget) >= budget) return;

    // Branch on the element with the fewest remaining coverers.
    const PointId pivot = by_options.front().second;
    std::vector<std::pair<std::size_t, PointId>> candidates;
    (coverers_[pivot] & allowed).for_each([&](std::size_t y) {
      candidates.push_back({covers_[y].and_count(uncovered), static_cast<PointId>(y)});
    });
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [gain, y] : candidates) {
      if (chosen_.size() + 1 >= best_.size()) return;
      allowed.reset(y);
      Bitset rest = uncovered;
      rest.subtract(covers_[y]);
      chosen_.push_back(y);
      Search(rest, allowed);
      chosen_.pop_back();
    }
  }

  const std::vector<Bitset>& coverers_;
  std::vector<Bitset> covers_;
  std::size_t n_;
  std::vector<PointId> best_;
  std::vector<PointId> chosen_;
  std::vector<std::size_t> gain_;
  std::vector<double> lambda_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string to_string(SolverMethod m) { return m == SolverMethod::ExactBnB ? "ExactBnB" : "Greedy"; }

CoverResult greedy_cover(const std::vector<Bitset>& cover) {
  CoverResult r;
  r.witness = GreedyCoverIds(Transpose(cover), cover.size());
  r.cardinality = r.witness.size();
  r.method = SolverMethod::Greedy;
  r.optimal = false;
  return r;
}

CoverResult exact_cover(const std::vector<Bitset>& cover) {
  CoverResult r;
  r.method = SolverMethod::ExactBnB;
  r.optimal = true;
  if (cover.empty()) return r;
  CoverSearch search(cover, GreedyCoverIds(Transpose(cover), cover.size()));
  search.Run();
  r.witness = search.best();
  r.cardinality = r.witness.size();
  r.nodes = search.nodes();
  return r;
}

CoverResult min_spanning(const RelationGraph& graph, const SolverOptions& options) {
  const bool exact = options.mode == SolveMode::Exact ||
                     (options.mode == SolveMode::Auto && graph.size() <= options.exact_threshold);
  return exact ? exact_cover(graph.cover) : greedy_cover(graph.cover);
}

}  // namespace qme
