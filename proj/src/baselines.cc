// Copyright 2026 The lavc Authors
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

#include "lavc/baselines.h"

#include <string>

namespace lavc {
namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g)
      : g_(g),
        alive_(g.num_vertices(), 1),
        degree_(g.num_vertices()),
        best_(g.non_isolated_vertices()) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) degree_[v] = g.degree(v);
  }

  CoverSet run() {
    search();
    return CoverSet(best_);
  }

 private:
  void remove(VertexId v) {
    alive_[v] = 0;
    for (const Incidence& inc : g_.adjacency(v)) {
      if (alive_[inc.neighbor]) --degree_[inc.neighbor];
    }
  }

  void restore(VertexId v) {
    alive_[v] = 1;
    for (const Incidence& inc : g_.adjacency(v)) {
      if (alive_[inc.neighbor]) ++degree_[inc.neighbor];
    }
  }

  // Size of a greedy maximal matching on the residual graph; any cover of
  // the residual graph needs one endpoint of each matched edge.
  std::size_t matching_bound() const {
    std::vector<char> matched(g_.num_vertices(), 0);
    std::size_t size = 0;
    for (const Edge& e : g_.edges()) {
      if (alive_[e.u] && alive_[e.v] && !matched[e.u] && !matched[e.v]) {
        matched[e.u] = matched[e.v] = 1;
        ++size;
      }
    }
    return size;
  }

  void search() {
    VertexId pivot = 0;
    std::size_t pivot_degree = 0;
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (alive_[v] && degree_[v] > pivot_degree) {
        pivot = v;
        pivot_degree = degree_[v];
      }
    }
    if (pivot_degree == 0) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + matching_bound() >= best_.size()) return;

    chosen_.push_back(pivot);
    remove(pivot);
    search();
    restore(pivot);
    chosen_.pop_back();

    // Pivot stays out, so every live neighbour goes in.
    if (chosen_.size() + pivot_degree >= best_.size()) return;
    std::vector<VertexId> neighbours;
    for (const Incidence& inc : g_.adjacency(pivot)) {
      if (alive_[inc.neighbor]) neighbours.push_back(inc.neighbor);
    }
    remove(pivot);
    for (const VertexId u : neighbours) {
      chosen_.push_back(u);
      remove(u);
    }
    search();
    for (auto it = neighbours.rbegin(); it != neighbours.rend(); ++it) {
      restore(*it);
      chosen_.pop_back();
    }
    restore(pivot);
  }

  const Graph& g_;
  std::vector<char> alive_;
  std::vector<std::size_t> degree_;
  std::vector<VertexId> chosen_;
  std::vector<VertexId> best_;
};

}  // namespace

CoverSet greedy_max_degree(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  std::vector<char> taken(n, 0);
  for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);

  std::vector<VertexId> cover;
  std::size_t remaining = g.num_edges();
  while (remaining > 0) {
    VertexId pick = 0;
    for (VertexId v = 1; v < n; ++v) {
      if (degree[v] > degree[pick]) pick = v;
    }
    cover.push_back(pick);
    taken[pick] = 1;
    remaining -= degree[pick];
    degree[pick] = 0;
    for (const Incidence& inc : g.adjacency(pick)) {
      if (!taken[inc.neighbor]) --degree[inc.neighbor];
    }
  }
  return CoverSet(std::move(cover));
}

MatchingCover two_approx_matching(const Graph& g, Rng& rng) {
  MatchingCover result;
  std::vector<char> taken(g.num_vertices(), 0);
  std::vector<EdgeId> pool(g.num_edges());
  for (EdgeId e = 0; e < pool.size(); ++e) pool[e] = e;

  std::vector<VertexId> cover;
  while (!pool.empty()) {
    const std::size_t at =
        std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
    const EdgeId picked = pool[at];
    const Edge& e = g.edge(picked);
    result.matching.push_back(picked);
    taken[e.u] = taken[e.v] = 1;
    cover.push_back(e.u);
    cover.push_back(e.v);
    // Drop every edge now touched; order of survivors is irrelevant.
    std::erase_if(pool, [&](EdgeId id) {
      const Edge& x = g.edge(id);
      return taken[x.u] || taken[x.v];
    });
  }
  result.cover = CoverSet(std::move(cover));
  return result;
}

CoverSet exact_min_cover(const Graph& g, std::size_t size_limit) {
  const std::size_t active = g.non_isolated_vertices().size();
  if (active > size_limit) {
    throw InstanceTooLarge("exact search is limited to " +
                           std::to_string(size_limit) +
                           " non-isolated vertices; graph has " +
                           std::to_string(active));
  }
  return BranchAndBound(g).run();
}

}  // namespace lavc
