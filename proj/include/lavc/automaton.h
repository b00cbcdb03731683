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

#ifndef LAVC_AUTOMATON_H_
#define LAVC_AUTOMATON_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lavc/graph.h"

namespace lavc {

// Every stochastic component takes one of these by reference; a run owns
// exactly one, seeded from its configuration.
using Rng = std::mt19937_64;

enum class SchemeKind {
  kRewardPenalty,         // L_R-P:  b == a
  kRewardEpsilonPenalty,  // L_R-eP: 0 < b < a
  kRewardInaction,        // L_R-I:  b == 0
};

std::string_view to_string(SchemeKind kind);

// Linear reinforcement scheme: reward rate a in (0,1], penalty rate b in
// [0,1). The constructor rejects (kind, a, b) combinations that do not
// match the kind.
class ReinforcementScheme {
 public:
  ReinforcementScheme(SchemeKind kind, double reward_rate,
                      double penalty_rate);

  static ReinforcementScheme reward_inaction(double a) {
    return {SchemeKind::kRewardInaction, a, 0.0};
  }
  static ReinforcementScheme reward_penalty(double a) {
    return {SchemeKind::kRewardPenalty, a, a};
  }
  static ReinforcementScheme reward_epsilon_penalty(double a, double b) {
    return {SchemeKind::kRewardEpsilonPenalty, a, b};
  }

  SchemeKind kind() const { return kind_; }
  double reward_rate() const { return reward_rate_; }
  double penalty_rate() const { return penalty_rate_; }

 private:
  SchemeKind kind_;
  double reward_rate_;
  double penalty_rate_;
};

// Variable-structure learning automaton over a finite action set. Action i
// is labelled with an edge id; the environment response is binary and is
// delivered by calling reward() or penalize() for the action taken.
class Automaton {
 public:
  static constexpr double kSumTolerance = 1e-9;

  // p_i = 1/r. Throws std::invalid_argument for an empty label set.
  static Automaton uniform(std::vector<EdgeId> labels,
                           ReinforcementScheme scheme);

  // Explicit start state. `probabilities` must be non-empty, within [0,1]
  // and sum to 1 within kSumTolerance. Labels default to 0..r-1.
  Automaton(std::vector<double> probabilities, ReinforcementScheme scheme,
            std::vector<EdgeId> labels = {});

  std::size_t num_actions() const { return probabilities_.size(); }
  std::span<const double> probabilities() const { return probabilities_; }
  double probability(std::size_t i) const { return probabilities_.at(i); }
  std::span<const EdgeId> labels() const { return labels_; }
  EdgeId label(std::size_t i) const { return labels_.at(i); }
  const ReinforcementScheme& scheme() const { return scheme_; }

  // Favourable response to action i:
  //   p_i <- p_i + a (1 - p_i),   p_j <- (1 - a) p_j  for j != i.
  void reward(std::size_t i);

  // Unfavourable response to action i:
  //   p_i <- (1 - b) p_i,   p_j <- b / (r - 1) + (1 - b) p_j  for j != i.
  // A single-action automaton stays at (1).
  void penalize(std::size_t i);

  std::size_t select_action(Rng& rng) const;

  // Samples from p restricted to `allowed` (indices), renormalised. Returns
  // nullopt when the allowed actions carry no probability mass. The stored
  // vector is not touched.
  std::optional<std::size_t> select_action(
      Rng& rng, std::span<const std::size_t> allowed) const;

  // Same, with admissibility given as a predicate over action indices.
  template <typename Allowed>
  std::optional<std::size_t> select_action_if(Rng& rng,
                                              Allowed&& allowed) const {
    double mass = 0.0;
    for (std::size_t i = 0; i < probabilities_.size(); ++i) {
      if (probabilities_[i] > 0.0 && allowed(i)) mass += probabilities_[i];
    }
    if (!(mass > 0.0)) return std::nullopt;
    const double target = std::uniform_real_distribution<double>(0.0, mass)(rng);
    double cumulative = 0.0;
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < probabilities_.size(); ++i) {
      if (!(probabilities_[i] > 0.0) || !allowed(i)) continue;
      cumulative += probabilities_[i];
      last = i;
      if (target < cumulative) return i;
    }
    return last;
  }

  // Entropy of p in bits divided by log2(r), so it lies in [0,1]; 0 log 0
  // is taken as 0 and a single-action automaton has entropy 0.
  double normalized_entropy() const;

 private:
  Automaton(std::vector<double> probabilities, ReinforcementScheme scheme,
            std::vector<EdgeId> labels, bool /*trusted*/);
  void check_index(std::size_t i) const;
  void renormalize_if_drifted();

  std::vector<double> probabilities_;
  ReinforcementScheme scheme_;
  std::vector<EdgeId> labels_;
};

}  // namespace lavc

#endif  // LAVC_AUTOMATON_H_
