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

#ifndef LAVC_TESTS_TEST_GRAPHS_H_
#define LAVC_TESTS_TEST_GRAPHS_H_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lavc/automaton.h"
#include "lavc/graph.h"

namespace lavc::testing {

inline Graph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph path_graph(std::size_t n) {
  std::vector<VertexPair> pairs;
  for (VertexId v = 0; v + 1 < n; ++v) pairs.push_back({v, v + 1});
  return build_graph(n, pairs);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<VertexPair> pairs;
  for (VertexId v = 0; v < n; ++v) {
    pairs.push_back({v, static_cast<VertexId>((v + 1) % n)});
  }
  return build_graph(n, pairs);
}

// Center 0, leaves 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<VertexPair> pairs;
  for (VertexId v = 1; v <= leaves; ++v) pairs.push_back({0, v});
  return build_graph(leaves + 1, pairs);
}

// k disjoint edges {2i, 2i+1}.
inline Graph matching_graph(std::size_t k) {
  std::vector<VertexPair> pairs;
  for (VertexId i = 0; i < k; ++i) pairs.push_back({2 * i, 2 * i + 1});
  return build_graph(2 * k, pairs);
}

inline Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexPair> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) pairs.push_back({u, v});
    }
  }
  return build_graph(n, pairs);
}

// Oracle: minimum cover size by trying all 2^n vertex subsets. Written
// against the raw edge list only, independent of every solver.
inline std::size_t enumerate_min_cover_size(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 20) throw std::invalid_argument("enumeration limited to n <= 20");
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best) continue;
    bool covers = true;
    for (const Edge& e : g.edges()) {
      if (!((mask >> e.u) & 1u) && !((mask >> e.v) & 1u)) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

}  // namespace lavc::testing

#endif  // LAVC_TESTS_TEST_GRAPHS_H_
