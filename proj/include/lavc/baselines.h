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

#ifndef LAVC_BASELINES_H_
#define LAVC_BASELINES_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lavc/automaton.h"
#include "lavc/graph.h"

namespace lavc {

// Repeatedly takes a vertex of maximum residual degree (lowest id on ties)
// and deletes its edges until none remain.
CoverSet greedy_max_degree(const Graph& g);

struct MatchingCover {
  CoverSet cover;
  // Edges picked, in pick order. They form a maximal matching, and the
  // cover is exactly their endpoints.
  std::vector<EdgeId> matching;
};

// Picks a uniformly random remaining edge, takes both endpoints and deletes
// every edge they touch; repeats until no edge remains. At most twice the
// optimum.
MatchingCover two_approx_matching(const Graph& g, Rng& rng);
inline CoverSet two_approx_random_matching(const Graph& g, Rng& rng) {
  return two_approx_matching(g, rng).cover;
}

class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultExactLimit = 25;

// Minimum vertex cover by branch and bound: branch on a maximum-degree
// vertex v (v in the cover, or all of N(v) in it), prune with the size of a
// greedy maximal matching on the residual graph. Throws InstanceTooLarge
// when g has more than `size_limit` non-isolated vertices.
CoverSet exact_min_cover(const Graph& g,
                         std::size_t size_limit = kDefaultExactLimit);

}  // namespace lavc

#endif  // LAVC_BASELINES_H_
