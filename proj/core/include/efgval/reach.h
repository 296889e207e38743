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

#ifndef EFGVAL_REACH_H_
#define EFGVAL_REACH_H_

#include <vector>

#include "efgval/game.h"
#include "efgval/strategy.h"

namespace efgval {

// Reach probability of a history split into contributions. Chance is part of
// the counterfactual component of both players.
struct ReachTriple {
  double total = 1.0;
  double own[kNumPlayers] = {1.0, 1.0};
  double counterfactual[kNumPlayers] = {1.0, 1.0};
};

// Per-node reach contributions of player 1, player 2 and chance, computed in
// one forward sweep.
class ReachTable {
 public:
  ReachTable() = default;
  ReachTable(const Game& game, const StrategyProfile& profile);

  double player(int p, NodeId h) const { return own_[p - 1][h]; }
  double chance(NodeId h) const { return chance_[h]; }
  double Total(NodeId h) const { return own_[0][h] * own_[1][h] * chance_[h]; }
  // Reach contributed by the opponent of p and chance.
  double Counterfactual(int p, NodeId h) const {
    return own_[2 - p][h] * chance_[h];
  }
  ReachTriple Triple(NodeId h) const;

 private:
  std::vector<double> own_[kNumPlayers];
  std::vector<double> chance_;
};

// Reach of h by walking the root-to-h path.
ReachTriple Reach(const Game& game, const StrategyProfile& profile, NodeId h);
// Reach of h from its ancestor g, i.e. the product over the g-to-h edges.
ReachTriple ReachFrom(const Game& game, const StrategyProfile& profile,
                      NodeId g, NodeId h);

struct InfosetReach {
  double total = 0.0;           // sum of member reach
  double counterfactual = 0.0;  // sum of member counterfactual reach
  double own = 0.0;             // own reach of the first member
};

// Reach of augmented set `set` of `player`.
InfosetReach ComputeInfosetReach(const Game& game, const ReachTable& reach,
                                 int player, int set);

// Conditional probability of every member of augmented set `set` (member
// order). Uses the total reach when the set is reachable, else the
// counterfactual reach, else uniform play of both players under the game's
// chance probabilities, and finally a uniform distribution over members.
std::vector<double> CondDistribution(const Game& game, const ReachTable& reach,
                                     int player, int set);
double CondReach(const Game& game, const ReachTable& reach, int player,
                 int set, NodeId h);

// Reach of descendant set J conditional on set I, both of `player`.
struct CondInfosetReach {
  double total = 0.0;
  double own = 0.0;
  double counterfactual = 0.0;
};
CondInfosetReach ComputeCondInfosetReach(const Game& game,
                                         const StrategyProfile& profile,
                                         const ReachTable& reach, int player,
                                         int set_i, int set_j);

// The ancestor of h at the given tree depth.
NodeId AncestorAtDepth(const Game& game, NodeId h, int depth);

}  // namespace efgval

#endif  // EFGVAL_REACH_H_
