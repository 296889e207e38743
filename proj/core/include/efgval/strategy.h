// Copyright 2026 The efgval Authors. All rights reserved.
//
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

#ifndef EFGVAL_STRATEGY_H_
#define EFGVAL_STRATEGY_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "efgval/game.h"

namespace efgval {

// Behavioral strategies of both acting players, indexed by declared infoset
// and action in document order. Chance is fixed by the game.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  static StrategyProfile Uniform(const Game& game);
  // Every infoset distribution drawn from a unit-concentration Dirichlet.
  static StrategyProfile Random(const Game& game, std::mt19937_64& rng);

  std::span<const double> at(int player, int infoset) const {
    return probs_[player - 1][infoset];
  }
  std::span<double> mutable_at(int player, int infoset) {
    return probs_[player - 1][infoset];
  }
  int num_infosets(int player) const {
    return static_cast<int>(probs_[player - 1].size());
  }

  // Probability of taking action a at node h, chance included.
  double ActionProb(const Game& game, NodeId h, int a) const;

  // Puts all mass of the infoset on one action.
  void SetPure(int player, int infoset, int action);

  bool operator==(const StrategyProfile&) const = default;

 private:
  std::vector<std::vector<double>> probs_[kNumPlayers];
};

// Sets a node-labelled action: "<player>:<infoset label>" plus action label.
void SetPureByLabel(const Game& game, StrategyProfile& profile,
                    std::string_view infoset_key, std::string_view action);

// (1 - 1/n) sigma + (1/n) uniform at every infoset.
StrategyProfile NoisyProfile(const Game& game, const StrategyProfile& sigma,
                             double n);

// Mixes two profiles in realization-plan space and converts back to a
// behavioral profile; where the mixed realization weight of an infoset is 0
// the result is uniform.
StrategyProfile MixRealization(const Game& game, const StrategyProfile& a,
                               const StrategyProfile& b, double lambda);

// Copies the distributions of the given player from src into dst.
void CopyPlayer(int player, const StrategyProfile& src, StrategyProfile& dst);

// Maximum deviation of any infoset distribution from summing to 1.
double MaxNormalizationError(const StrategyProfile& profile);

// Rows "<player>:<infoset>\t<action>\t<prob>" in canonical order.
std::string WriteStrategy(const Game& game, const StrategyProfile& profile);
// Starts from uniform and overwrites the listed entries.
StrategyProfile ReadStrategy(const Game& game, std::string_view text);

std::string InfosetKey(const Game& game, int player, int infoset);

}  // namespace efgval

#endif  // EFGVAL_STRATEGY_H_
