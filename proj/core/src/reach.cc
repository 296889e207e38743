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

#include "efgval/reach.h"

#include <algorithm>

namespace efgval {

ReachTable::ReachTable(const Game& game, const StrategyProfile& profile) {
  const int n = game.num_nodes();
  own_[0].assign(n, 1.0);
  own_[1].assign(n, 1.0);
  chance_.assign(n, 1.0);
  for (NodeId h = 1; h < n; ++h) {
    const Node& node = game.node(h);
    const NodeId par = node.parent;
    own_[0][h] = own_[0][par];
    own_[1][h] = own_[1][par];
    chance_[h] = chance_[par];
    const double prob = profile.ActionProb(game, par, node.parent_action);
    const Node& parent = game.node(par);
    if (parent.is_chance()) {
      chance_[h] *= prob;
    } else {
      own_[parent.player - 1][h] *= prob;
    }
  }
}

ReachTriple ReachTable::Triple(NodeId h) const {
  ReachTriple triple;
  triple.total = Total(h);
  for (int p = 1; p <= kNumPlayers; ++p) {
    triple.own[p - 1] = player(p, h);
    triple.counterfactual[p - 1] = Counterfactual(p, h);
  }
  return triple;
}

ReachTriple ReachFrom(const Game& game, const StrategyProfile& profile,
                      NodeId g, NodeId h) {
  double own[kNumPlayers] = {1.0, 1.0};
  double chance = 1.0;
  for (NodeId v = h; v != g; v = game.node(v).parent) {
    if (v == kNoNode) {
      throw EfgError(ErrorCode::kInvalidArgument,
                     game.PathKey(g) + " is not an ancestor of " +
                         game.PathKey(h));
    }
    const Node& node = game.node(v);
    if (node.parent == kNoNode) {
      throw EfgError(ErrorCode::kInvalidArgument,
                     game.PathKey(g) + " is not an ancestor of " +
                         game.PathKey(h));
    }
    const Node& parent = game.node(node.parent);
    const double prob = profile.ActionProb(game, node.parent, node.parent_action);
    if (parent.is_chance()) {
      chance *= prob;
    } else {
      own[parent.player - 1] *= prob;
    }
  }
  ReachTriple triple;
  triple.total = own[0] * own[1] * chance;
  triple.own[0] = own[0];
  triple.own[1] = own[1];
  triple.counterfactual[0] = own[1] * chance;
  triple.counterfactual[1] = own[0] * chance;
  return triple;
}

ReachTriple Reach(const Game& game, const StrategyProfile& profile, NodeId h) {
  return ReachFrom(game, profile, game.root(), h);
}

InfosetReach ComputeInfosetReach(const Game& game, const ReachTable& reach,
                                 int player, int set) {
  const auto& members = game.augmented(player).sets[set];
  InfosetReach out;
  for (NodeId h : members) {
    out.total += reach.Total(h);
    out.counterfactual += reach.Counterfactual(player, h);
  }
  out.own = reach.player(player, members.front());
  return out;
}

namespace {

// Reach of h when both players act uniformly at random.
double UniformPlayReach(const Game& game, NodeId h) {
  double prob = 1.0;
  for (NodeId v = h; game.node(v).parent != kNoNode; v = game.node(v).parent) {
    const Node& parent = game.node(game.node(v).parent);
    prob *= parent.is_chance() ? parent.chance_probs[game.node(v).parent_action]
                               : 1.0 / parent.num_actions();
  }
  return prob;
}

}  // namespace

std::vector<double> CondDistribution(const Game& game, const ReachTable& reach,
                                     int player, int set) {
  const auto& members = game.augmented(player).sets[set];
  std::vector<double> weights(members.size());
  auto normalized = [&weights]() {
    double total = 0.0;
    for (double w : weights) total += w;
    if (total <= 0.0) return false;
    for (double& w : weights) w /= total;
    return true;
  };
  for (size_t i = 0; i < members.size(); ++i) {
    weights[i] = reach.Total(members[i]);
  }
  if (normalized()) return weights;
  for (size_t i = 0; i < members.size(); ++i) {
    weights[i] = reach.Counterfactual(player, members[i]);
  }
  if (normalized()) return weights;
  for (size_t i = 0; i < members.size(); ++i) {
    weights[i] = UniformPlayReach(game, members[i]);
  }
  if (normalized()) return weights;
  std::fill(weights.begin(), weights.end(), 1.0 / members.size());
  return weights;
}

double CondReach(const Game& game, const ReachTable& reach, int player,
                 int set, NodeId h) {
  const auto& members = game.augmented(player).sets[set];
  auto it = std::find(members.begin(), members.end(), h);
  if (it == members.end()) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   game.PathKey(h) + " is not a member of " +
                       game.augmented(player).keys[set]);
  }
  return CondDistribution(game, reach, player, set)[it - members.begin()];
}

NodeId AncestorAtDepth(const Game& game, NodeId h, int depth) {
  NodeId v = h;
  while (v != kNoNode && game.node(v).depth > depth) v = game.node(v).parent;
  return v;
}

CondInfosetReach ComputeCondInfosetReach(const Game& game,
                                         const StrategyProfile& profile,
                                         const ReachTable& reach, int player,
                                         int set_i, int set_j) {
  const InfoPartition& part = game.augmented(player);
  if (!part.Precedes(set_i, set_j)) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   part.keys[set_i] + " does not precede " + part.keys[set_j]);
  }
  const auto& members_i = part.sets[set_i];
  const std::vector<double> cond = CondDistribution(game, reach, player, set_i);
  const int depth_i = game.node(members_i.front()).depth;
  CondInfosetReach out;
  bool own_set = false;
  for (NodeId h : part.sets[set_j]) {
    const NodeId g = AncestorAtDepth(game, h, depth_i);
    auto it = std::find(members_i.begin(), members_i.end(), g);
    if (it == members_i.end()) continue;
    const double c = cond[it - members_i.begin()];
    const ReachTriple path = ReachFrom(game, profile, g, h);
    out.total += c * path.total;
    out.counterfactual += c * path.counterfactual[player - 1];
    if (!own_set) {
      out.own = path.own[player - 1];
      own_set = true;
    }
  }
  return out;
}

}  // namespace efgval
