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

#include "lavc/automaton.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace lavc {

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kRewardPenalty:
      return "lrp";
    case SchemeKind::kRewardEpsilonPenalty:
      return "lrep";
    case SchemeKind::kRewardInaction:
      return "lri";
  }
  return "unknown";
}

ReinforcementScheme::ReinforcementScheme(SchemeKind kind, double reward_rate,
                                         double penalty_rate)
    : kind_(kind), reward_rate_(reward_rate), penalty_rate_(penalty_rate) {
  std::ostringstream msg;
  msg << to_string(kind) << " scheme with a=" << reward_rate
      << ", b=" << penalty_rate << ": ";
  if (!(reward_rate > 0.0 && reward_rate <= 1.0)) {
    throw std::invalid_argument(msg.str() + "reward rate must lie in (0,1]");
  }
  if (!(penalty_rate >= 0.0 && penalty_rate < 1.0)) {
    throw std::invalid_argument(msg.str() + "penalty rate must lie in [0,1)");
  }
  switch (kind) {
    case SchemeKind::kRewardPenalty:
      if (penalty_rate != reward_rate) {
        throw std::invalid_argument(msg.str() + "requires b == a");
      }
      break;
    case SchemeKind::kRewardEpsilonPenalty:
      if (!(penalty_rate > 0.0 && penalty_rate < reward_rate)) {
        throw std::invalid_argument(msg.str() + "requires 0 < b < a");
      }
      break;
    case SchemeKind::kRewardInaction:
      if (penalty_rate != 0.0) {
        throw std::invalid_argument(msg.str() + "requires b == 0");
      }
      break;
  }
}

Automaton Automaton::uniform(std::vector<EdgeId> labels,
                             ReinforcementScheme scheme) {
  if (labels.empty()) {
    throw std::invalid_argument("an automaton needs at least one action");
  }
  std::vector<double> p(labels.size(), 1.0 / static_cast<double>(labels.size()));
  return Automaton(std::move(p), scheme, std::move(labels), true);
}

Automaton::Automaton(std::vector<double> probabilities,
                     ReinforcementScheme scheme, std::vector<EdgeId> labels)
    : Automaton(std::move(probabilities), scheme, std::move(labels), true) {
  if (probabilities_.empty()) {
    throw std::invalid_argument("an automaton needs at least one action");
  }
  if (labels_.empty()) {
    labels_.resize(probabilities_.size());
    std::iota(labels_.begin(), labels_.end(), EdgeId{0});
  }
  if (labels_.size() != probabilities_.size()) {
    throw std::invalid_argument("label count differs from action count");
  }
  for (const double p : probabilities_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("action probability outside [0,1]");
    }
  }
  const double sum =
      std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("action probabilities do not sum to 1");
  }
}

Automaton::Automaton(std::vector<double> probabilities,
                     ReinforcementScheme scheme, std::vector<EdgeId> labels,
                     bool)
    : probabilities_(std::move(probabilities)),
      scheme_(scheme),
      labels_(std::move(labels)) {}

void Automaton::check_index(std::size_t i) const {
  if (i >= probabilities_.size()) {
    throw std::out_of_range("action " + std::to_string(i) +
                            " out of range for automaton with " +
                            std::to_string(probabilities_.size()) +
                            " actions");
  }
}

void Automaton::reward(std::size_t i) {
  check_index(i);
  const double a = scheme_.reward_rate();
  for (std::size_t j = 0; j < probabilities_.size(); ++j) {
    if (j == i) {
      probabilities_[j] += a * (1.0 - probabilities_[j]);
    } else {
      probabilities_[j] *= 1.0 - a;
    }
  }
  renormalize_if_drifted();
}

void Automaton::penalize(std::size_t i) {
  check_index(i);
  const double b = scheme_.penalty_rate();
  if (b == 0.0) return;
  const std::size_t r = probabilities_.size();
  if (r == 1) {
    probabilities_[0] = 1.0;
    return;
  }
  const double spread = b / static_cast<double>(r - 1);
  for (std::size_t j = 0; j < r; ++j) {
    if (j == i) {
      probabilities_[j] *= 1.0 - b;
    } else {
      probabilities_[j] = spread + (1.0 - b) * probabilities_[j];
    }
  }
  renormalize_if_drifted();
}

void Automaton::renormalize_if_drifted() {
  for (double& p : probabilities_) p = std::clamp(p, 0.0, 1.0);
  const double sum =
      std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    for (double& p : probabilities_) p /= sum;
  }
}

std::size_t Automaton::select_action(Rng& rng) const {
  // Total mass is 1, so some action always carries probability.
  return *select_action_if(rng, [](std::size_t) { return true; });
}

std::optional<std::size_t> Automaton::select_action(
    Rng& rng, std::span<const std::size_t> allowed) const {
  std::vector<char> admissible(probabilities_.size(), 0);
  for (const std::size_t i : allowed) {
    check_index(i);
    admissible[i] = 1;
  }
  return select_action_if(rng,
                          [&admissible](std::size_t i) { return admissible[i] != 0; });
}

double Automaton::normalized_entropy() const {
  const std::size_t r = probabilities_.size();
  if (r <= 1) return 0.0;
  if (std::adjacent_find(probabilities_.begin(), probabilities_.end(),
                         std::not_equal_to<>()) == probabilities_.end()) {
    return 1.0;
  }
  // Extended precision keeps near-uniform vectors within an ulp or so.
  long double bits = 0.0L;
  for (const double p : probabilities_) {
    if (p > 0.0) bits -= p * std::log2(static_cast<long double>(p));
  }
  const long double h = bits / std::log2(static_cast<long double>(r));
  return std::clamp(static_cast<double>(h), 0.0, 1.0);
}

}  // namespace lavc
