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

#include "lavc/dla_solver.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace lavc {
namespace {

// Uncovered edges with O(1) removal and uniform sampling.
class EdgePool {
 public:
  explicit EdgePool(std::size_t num_edges)
      : edges_(num_edges), position_(num_edges) {
    for (EdgeId e = 0; e < num_edges; ++e) {
      edges_[e] = e;
      position_[e] = e;
    }
  }

  std::size_t size() const { return edges_.size(); }

  void erase(EdgeId e) {
    const std::size_t at = position_[e];
    const EdgeId moved = edges_.back();
    edges_[at] = moved;
    position_[moved] = at;
    edges_.pop_back();
  }

  EdgeId sample(Rng& rng) const {
    return edges_[std::uniform_int_distribution<std::size_t>(
        0, edges_.size() - 1)(rng)];
  }

 private:
  std::vector<EdgeId> edges_;
  std::vector<std::size_t> position_;
};

struct Incumbent {
  CoverSet cover;
  std::size_t found_at = 0;
};

RunResult edgeless_result() {
  RunResult result;
  result.stop_reason = StopReason::kEntropyConverged;
  return result;
}

template <typename Step>
RunResult run_loop(const Graph& g, const RunConfig& config,
                   DlaNetwork& net, Step&& step) {
  Incumbent best{CoverSet::all_non_isolated(g), 0};
  RunResult result;
  for (std::size_t iteration = 1;; ++iteration) {
    Candidate candidate = step();
    const std::size_t size = candidate.cover.size();
    const bool rewarded = update_network(net, candidate.path, size,
                                         candidate.valid, best.cover.size());
    if (candidate.valid && size < best.cover.size()) {
      best = {std::move(candidate.cover), iteration};
    }
    result.records.push_back({iteration, size, candidate.valid, rewarded,
                              best.cover.size(),
                              net.mean_entropy(best.cover)});
    if (const auto stop = should_stop(net, &best.cover, iteration, config)) {
      result.stop_reason = *stop;
      break;
    }
  }
  result.cover_size = best.cover.size();
  result.first_best_iteration = best.found_at;
  result.best_cover = std::move(best.cover);
  return result;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kDlaWalk:
      return "dla";
    case Algorithm::kBinaryAction:
      return "binary";
  }
  return "unknown";
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kEntropyConverged:
      return "entropy-converged";
    case StopReason::kIterationCap:
      return "iteration-cap";
  }
  return "unknown";
}

void RunConfig::validate(const Graph& g) const {
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be at least 1");
  }
  if (!(entropy_threshold >= 0.0 && entropy_threshold <= 1.0)) {
    throw std::invalid_argument("entropy_threshold must lie in [0,1]");
  }
  if (cover_threshold && g.num_vertices() > 0 &&
      (*cover_threshold < 1 || *cover_threshold > g.num_vertices())) {
    throw std::invalid_argument("cover_threshold must lie in [1," +
                                std::to_string(g.num_vertices()) + "]");
  }
}

DlaNetwork::DlaNetwork(const Graph& g, Algorithm kind)
    : graph_(&g), kind_(kind), automata_(g.num_vertices()) {}

const Automaton& DlaNetwork::automaton(VertexId v) const {
  const auto& slot = automata_.at(v);
  if (!slot) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " is isolated and carries no automaton");
  }
  return *slot;
}

Automaton& DlaNetwork::automaton(VertexId v) {
  return const_cast<Automaton&>(std::as_const(*this).automaton(v));
}

double DlaNetwork::mean_entropy(const CoverSet& c) const {
  double total = 0.0;
  std::size_t count = 0;
  for (const VertexId v : c) {
    if (v < automata_.size() && automata_[v]) {
      total += automata_[v]->normalized_entropy();
      ++count;
    }
  }
  return count == 0 ? 0.0 : total / static_cast<double>(count);
}

DlaNetwork build_network(const Graph& g, ReinforcementScheme scheme) {
  DlaNetwork net(g, Algorithm::kDlaWalk);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto adj = g.adjacency(v);
    if (adj.empty()) continue;
    std::vector<EdgeId> labels;
    labels.reserve(adj.size());
    for (const Incidence& inc : adj) labels.push_back(inc.edge);
    net.automata_[v] = Automaton::uniform(std::move(labels), scheme);
    net.active_.push_back(v);
  }
  return net;
}

DlaNetwork build_binary_network(const Graph& g, ReinforcementScheme scheme) {
  DlaNetwork net(g, Algorithm::kBinaryAction);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_isolated(v)) continue;
    net.automata_[v] = Automaton::uniform({0, 1}, scheme);
    net.active_.push_back(v);
  }
  return net;
}

Candidate construct_candidate(const DlaNetwork& net, Rng& rng,
                              std::size_t cover_threshold) {
  const Graph& g = net.graph();
  Candidate candidate;
  if (g.num_edges() == 0) {
    candidate.valid = true;
    return candidate;
  }

  const std::size_t n = g.num_vertices();
  std::vector<char> in_cover(n, 0);
  std::vector<char> next_to_cover(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<VertexId> members;
  EdgePool uncovered(g.num_edges());

  const auto join = [&](VertexId v) {
    in_cover[v] = 1;
    members.push_back(v);
    for (const Incidence& inc : g.adjacency(v)) {
      if (!in_cover[inc.neighbor]) uncovered.erase(inc.edge);
      next_to_cover[inc.neighbor] = 1;
    }
  };

  const auto starts = net.active_vertices();
  VertexId current = starts[std::uniform_int_distribution<std::size_t>(
      0, starts.size() - 1)(rng)];
  join(current);

  while (true) {
    visited[current] = 1;
    const auto adj = g.adjacency(current);
    const auto action = net.automaton(current).select_action_if(
        rng, [&](std::size_t i) { return !visited[adj[i].neighbor]; });
    if (action) candidate.path.push_back({current, *action});

    if (uncovered.size() == 0) {
      candidate.valid = true;
      break;
    }
    if (members.size() >= cover_threshold) break;

    if (action) {
      current = adj[*action].neighbor;
      if (!next_to_cover[current]) join(current);
    } else {
      const Edge& e = g.edge(uncovered.sample(rng));
      current = std::bernoulli_distribution(0.5)(rng) ? e.u : e.v;
      join(current);
    }
  }

  candidate.cover = CoverSet(std::move(members));
  return candidate;
}

bool update_network(DlaNetwork& net, std::span<const PathStep> path,
                    std::size_t candidate_size, bool candidate_valid,
                    std::size_t best_size) {
  const bool favourable = candidate_valid && candidate_size <= best_size;
  for (const PathStep& step : path) {
    Automaton& automaton = net.automaton(step.vertex);
    if (favourable) {
      automaton.reward(step.action);
    } else {
      automaton.penalize(step.action);
    }
  }
  return favourable;
}

std::optional<StopReason> should_stop(const DlaNetwork& net,
                                      const CoverSet* best_cover,
                                      std::size_t iteration,
                                      const RunConfig& config) {
  if (iteration >= config.max_iterations) return StopReason::kIterationCap;
  if (best_cover != nullptr &&
      net.mean_entropy(*best_cover) < config.entropy_threshold) {
    return StopReason::kEntropyConverged;
  }
  return std::nullopt;
}

RunResult solve(const Graph& g, const RunConfig& config) {
  if (config.algorithm == Algorithm::kBinaryAction) {
    return solve_binary(g, config);
  }
  config.validate(g);
  if (g.num_edges() == 0) return edgeless_result();

  DlaNetwork net = build_network(g, config.scheme);
  Rng rng(config.seed);
  const std::size_t threshold = config.effective_cover_threshold(g);
  return run_loop(g, config, net, [&]() {
    return construct_candidate(net, rng, threshold);
  });
}

RunResult solve_binary(const Graph& g, const RunConfig& config) {
  config.validate(g);
  if (g.num_edges() == 0) return edgeless_result();

  DlaNetwork net = build_binary_network(g, config.scheme);
  Rng rng(config.seed);
  const std::size_t threshold = config.effective_cover_threshold(g);
  return run_loop(g, config, net, [&]() {
    Candidate candidate;
    std::vector<VertexId> members;
    for (const VertexId v : net.active_vertices()) {
      const std::size_t action = net.automaton(v).select_action(rng);
      candidate.path.push_back({v, action});
      if (action == DlaNetwork::kIn) members.push_back(v);
    }
    candidate.cover = CoverSet(std::move(members));
    candidate.valid = candidate.cover.size() <= threshold &&
                      is_vertex_cover(g, candidate.cover);
    return candidate;
  });
}

}  // namespace lavc
