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

#ifndef LAVC_DLA_SOLVER_H_
#define LAVC_DLA_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lavc/automaton.h"
#include "lavc/graph.h"

namespace lavc {

enum class Algorithm {
  kDlaWalk,       // one automaton per vertex, actions = incident edges
  kBinaryAction,  // one automaton per vertex, actions = {in, out}
};

enum class StopReason { kEntropyConverged, kIterationCap };

std::string_view to_string(Algorithm algorithm);
std::string_view to_string(StopReason reason);

struct RunConfig {
  ReinforcementScheme scheme = ReinforcementScheme::reward_inaction(0.3);
  std::size_t max_iterations = 1000;
  double entropy_threshold = 0.05;
  // Candidates reaching this many vertices without covering the graph are
  // abandoned as invalid. Unset means the vertex count.
  std::optional<std::size_t> cover_threshold;
  std::uint64_t seed = 1;
  Algorithm algorithm = Algorithm::kDlaWalk;

  // Throws std::invalid_argument if a field is out of range for g.
  void validate(const Graph& g) const;
  std::size_t effective_cover_threshold(const Graph& g) const {
    return cover_threshold.value_or(g.num_vertices());
  }
};

// One automaton per non-isolated vertex. In the walk network, action i of
// vertex v is the edge g.adjacency(v)[i]; picking it activates the
// neighbour at the far end. In the binary network, action 0 means "in the
// cover" and action 1 "out".
class DlaNetwork {
 public:
  static constexpr std::size_t kIn = 0;
  static constexpr std::size_t kOut = 1;

  const Graph& graph() const { return *graph_; }
  Algorithm kind() const { return kind_; }

  bool has_automaton(VertexId v) const { return automata_.at(v).has_value(); }
  const Automaton& automaton(VertexId v) const;
  Automaton& automaton(VertexId v);
  std::size_t num_automata() const { return active_.size(); }
  // Vertices that carry an automaton, ascending.
  std::span<const VertexId> active_vertices() const { return active_; }

  // Mean normalized entropy over the automata of c's members; members
  // without an automaton are skipped. 0 when none remain.
  double mean_entropy(const CoverSet& c) const;

 private:
  friend DlaNetwork build_network(const Graph&, ReinforcementScheme);
  friend DlaNetwork build_binary_network(const Graph&, ReinforcementScheme);
  DlaNetwork(const Graph& g, Algorithm kind);

  const Graph* graph_;
  Algorithm kind_;
  std::vector<std::optional<Automaton>> automata_;
  std::vector<VertexId> active_;
};

// The graph must outlive the returned network.
DlaNetwork build_network(const Graph& g, ReinforcementScheme scheme);
DlaNetwork build_binary_network(const Graph& g, ReinforcementScheme scheme);

struct PathStep {
  VertexId vertex;
  std::size_t action;

  bool operator==(const PathStep&) const = default;
};

struct Candidate {
  CoverSet cover;
  // Automaton choices in the order they were made.
  std::vector<PathStep> path;
  bool valid = false;
};

// Builds one candidate cover with a random walk over the walk network.
//
// The walk starts at a uniformly drawn non-isolated vertex, which joins the
// cover. Each activated automaton picks one of its edges whose far end has
// not been visited in this walk, and the far end is activated next. An
// activated vertex already adjacent to the cover only relays the walk; any
// other activated vertex joins. When an automaton has no admissible edge,
// the walk jumps to a random endpoint of a random uncovered edge, which
// joins without a recorded choice. The walk ends once the cover is valid,
// or as invalid once it holds `cover_threshold` vertices.
Candidate construct_candidate(const DlaNetwork& net, Rng& rng,
                              std::size_t cover_threshold);

// Rewards every path step when the candidate is valid and no larger than
// the best so far (ties included); penalizes every step otherwise. Returns
// whether the steps were rewarded.
bool update_network(DlaNetwork& net, std::span<const PathStep> path,
                    std::size_t candidate_size, bool candidate_valid,
                    std::size_t best_size);

// Iteration cap takes precedence over entropy convergence.
std::optional<StopReason> should_stop(const DlaNetwork& net,
                                      const CoverSet* best_cover,
                                      std::size_t iteration,
                                      const RunConfig& config);

struct IterationRecord {
  std::size_t iteration = 0;  // 1-based
  std::size_t candidate_size = 0;
  bool candidate_valid = false;
  bool rewarded = false;
  std::size_t best_size = 0;
  // Over the automata of the best cover after this iteration's update.
  double mean_entropy = 0.0;

  bool operator==(const IterationRecord&) const = default;
};

struct RunResult {
  CoverSet best_cover;
  // Cn: |best_cover|.
  std::size_t cover_size = 0;
  // Lp: iteration at which best_cover was first reached; 0 if the initial
  // all-vertices cover was never improved on.
  std::size_t first_best_iteration = 0;
  std::vector<IterationRecord> records;
  StopReason stop_reason = StopReason::kIterationCap;

  bool operator==(const RunResult&) const = default;
};

// Runs the learning loop chosen by config.algorithm. Deterministic in
// (g, config).
RunResult solve(const Graph& g, const RunConfig& config);
// The two-action variant, regardless of config.algorithm.
RunResult solve_binary(const Graph& g, const RunConfig& config);

}  // namespace lavc

#endif  // LAVC_DLA_SOLVER_H_
