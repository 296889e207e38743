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

#include "efgval/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

namespace efgval {
namespace {

constexpr double kChanceSumTolerance = 1e-12;

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns true when two distinct classes were joined. The smaller
  // representative wins so that results do not depend on merge order.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

NodeSpec NodeSpec::Terminal(double utility) {
  NodeSpec spec;
  spec.kind = NodeKind::kTerminal;
  spec.utility = utility;
  return spec;
}

NodeSpec NodeSpec::Decision(
    int player, std::string infoset,
    std::vector<std::pair<std::string, NodeSpec>> moves) {
  NodeSpec spec;
  spec.kind = NodeKind::kDecision;
  spec.player = player;
  spec.infoset = std::move(infoset);
  for (auto& [action, child] : moves) {
    spec.actions.push_back(action);
    spec.children.push_back(std::move(child));
  }
  return spec;
}

NodeSpec NodeSpec::Chance(
    std::vector<std::tuple<std::string, double, NodeSpec>> outcomes) {
  NodeSpec spec;
  spec.kind = NodeKind::kChance;
  for (auto& [action, prob, child] : outcomes) {
    spec.actions.push_back(action);
    spec.probs.push_back(prob);
    spec.children.push_back(std::move(child));
  }
  return spec;
}

bool InfoPartition::Precedes(int a, int b) const {
  for (int s = b; s >= 0; s = parent[s]) {
    if (s == a) return true;
  }
  return false;
}

int InfoPartition::Find(std::string_view key) const {
  for (int s = 0; s < size(); ++s) {
    if (keys[s] == key) return s;
  }
  return -1;
}

int PublicTree::Find(std::string_view id) const {
  for (int s = 0; s < size(); ++s) {
    if (states[s].id == id) return s;
  }
  return -1;
}

Game Game::FromSpec(std::string name, const NodeSpec& root) {
  Game game;
  game.name_ = std::move(name);
  game.Flatten(root, kNoNode, -1, 0, "root");
  game.CollectInfosets();
  game.DeriveAugmented(1);
  game.DeriveAugmented(2);
  game.DerivePublicTree();
  return game;
}

void Game::Flatten(const NodeSpec& spec, NodeId parent, int parent_action,
                   int depth, const std::string& where) {
  const NodeId id = num_nodes();
  nodes_.emplace_back();
  {
    Node& node = nodes_.back();
    node.kind = spec.kind;
    node.parent = parent;
    node.parent_action = parent_action;
    node.depth = depth;
  }
  if (spec.children.size() != spec.actions.size()) {
    throw EfgError(ErrorCode::kStructure,
                   where + ": action and child counts differ");
  }
  switch (spec.kind) {
    case NodeKind::kTerminal: {
      if (!spec.children.empty()) {
        throw EfgError(ErrorCode::kStructure,
                       where + ": terminal node has children");
      }
      if (!std::isfinite(spec.utility)) {
        throw EfgError(ErrorCode::kStructure,
                       where + ": utility is not finite");
      }
      nodes_[id].utility = spec.utility;
      break;
    }
    case NodeKind::kDecision: {
      if (spec.player != 1 && spec.player != 2) {
        throw EfgError(ErrorCode::kStructure,
                       where + ": decision player must be 1 or 2");
      }
      if (spec.infoset.empty()) {
        throw EfgError(ErrorCode::kStructure,
                       where + ": decision node without infoset label");
      }
      nodes_[id].player = spec.player;
      nodes_[id].infoset = spec.infoset;
      break;
    }
    case NodeKind::kChance: {
      if (spec.probs.size() != spec.actions.size()) {
        throw EfgError(ErrorCode::kStructure,
                       where + ": every chance outcome needs a probability");
      }
      double sum = 0.0;
      for (double p : spec.probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
          throw EfgError(ErrorCode::kChanceProbabilities,
                         where + ": chance probability outside [0,1]");
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > kChanceSumTolerance) {
        throw EfgError(ErrorCode::kChanceProbabilities,
                       where + ": chance probabilities sum to " +
                           std::to_string(sum));
      }
      nodes_[id].chance_probs = spec.probs;
      break;
    }
  }
  if (spec.kind != NodeKind::kTerminal) {
    if (spec.actions.empty()) {
      throw EfgError(ErrorCode::kStructure,
                     where + ": non-terminal node without actions");
    }
    std::set<std::string> seen;
    for (const auto& action : spec.actions) {
      if (action.empty() || action.find('/') != std::string::npos) {
        throw EfgError(ErrorCode::kStructure,
                       where + ": action labels must be non-empty and "
                               "contain no '/'");
      }
      if (!seen.insert(action).second) {
        throw EfgError(ErrorCode::kStructure,
                       where + ": duplicate action label '" + action + "'");
      }
    }
    nodes_[id].actions = spec.actions;
  }
  const char* field =
      spec.kind == NodeKind::kChance ? ".outcomes[" : ".actions[";
  for (size_t a = 0; a < spec.children.size(); ++a) {
    const NodeId child = num_nodes();
    nodes_[id].children.push_back(child);
    Flatten(spec.children[a], id, static_cast<int>(a), depth + 1,
            where + field + std::to_string(a) + "].child");
  }
  nodes_[id].subtree_end = num_nodes();
}

void Game::CollectInfosets() {
  for (NodeId id = 0; id < num_nodes(); ++id) {
    Node& node = nodes_[id];
    if (!node.is_decision()) continue;
    auto& sets = infosets_[node.player - 1];
    int index = FindInfoset(node.player, node.infoset);
    if (index < 0) {
      index = static_cast<int>(sets.size());
      sets.push_back(
          Infoset{node.player, node.infoset, node.actions, {}});
    } else if (sets[index].actions != node.actions) {
      throw EfgError(ErrorCode::kInconsistentInfoset,
                     "infoset '" + node.infoset + "' of player " +
                         std::to_string(node.player) +
                         " has differing action lists at " + PathKey(id));
    }
    sets[index].members.push_back(id);
    node.infoset_index = index;
  }
}

int Game::FindInfoset(int player, std::string_view label) const {
  const auto& sets = infosets_[player - 1];
  for (size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

// Seeds the partition with the declared information sets of the player and
// closes it under "co-members have co-member parents". This is the finest
// partition that coincides with the declared sets and forms a tree.
void Game::DeriveAugmented(int player) {
  const int n = num_nodes();
  DisjointSets dsu(n);
  for (const Infoset& infoset : infosets(player)) {
    for (NodeId m : infoset.members) dsu.Union(infoset.members.front(), m);
  }
  bool changed = true;
  std::vector<NodeId> first_parent(n);
  while (changed) {
    changed = false;
    std::fill(first_parent.begin(), first_parent.end(), kNoNode);
    for (NodeId v = 1; v < n; ++v) {
      const int rep = dsu.Find(v);
      const NodeId par = nodes_[v].parent;
      if (first_parent[rep] == kNoNode) {
        first_parent[rep] = par;
      } else if (dsu.Union(first_parent[rep], par)) {
        changed = true;
      }
    }
  }

  InfoPartition& part = augmented_[player - 1];
  part.player = player;
  part.set_of.assign(n, -1);
  std::vector<int> index_of_rep(n, -1);
  for (NodeId v = 0; v < n; ++v) {
    const int rep = dsu.Find(v);
    if (index_of_rep[rep] < 0) {
      index_of_rep[rep] = part.size();
      part.sets.emplace_back();
    }
    part.set_of[v] = index_of_rep[rep];
    part.sets[index_of_rep[rep]].push_back(v);
  }

  const int num_sets = part.size();
  part.parent.assign(num_sets, -1);
  part.parent_action.assign(num_sets, -1);
  part.children.assign(num_sets, {});
  part.depth.assign(num_sets, 0);
  part.declared.assign(num_sets, -1);
  part.keys.resize(num_sets);
  for (int s = 0; s < num_sets; ++s) {
    const auto& members = part.sets[s];
    const Node& first = nodes_[members.front()];
    const bool decision = first.is_decision() && first.player == player;
    NodeId max_end = -1;
    for (NodeId m : members) {
      const Node& node = nodes_[m];
      const bool member_decision = node.is_decision() && node.player == player;
      if (member_decision != decision ||
          (decision && node.infoset_index != first.infoset_index)) {
        throw EfgError(ErrorCode::kInconsistentInfoset,
                       "augmented set of player " + std::to_string(player) +
                           " containing " + PathKey(members.front()) +
                           " mixes declared information sets at " +
                           PathKey(m));
      }
      if (m < max_end) {
        throw EfgError(ErrorCode::kThickInfoset,
                       "thick augmented set of player " +
                           std::to_string(player) + " at " + PathKey(m));
      }
      max_end = std::max(max_end, node.subtree_end);
    }
    if (decision) part.declared[s] = first.infoset_index;
    part.depth[s] = first.depth;
    part.keys[s] = std::to_string(player) + "@" + PathKey(members.front());
    if (first.parent != kNoNode) {
      const int ps = part.set_of[first.parent];
      part.parent[s] = ps;
      part.children[ps].push_back(s);
    }
  }
  for (int s = 0; s < num_sets; ++s) {
    const int ps = part.parent[s];
    if (ps >= 0 && part.declared[ps] >= 0) {
      part.parent_action[s] = nodes_[part.sets[s].front()].parent_action;
    }
  }
}

void Game::DerivePublicTree() {
  const int n = num_nodes();
  DisjointSets dsu(n);
  for (const auto& part : augmented_) {
    for (const auto& set : part.sets) {
      for (NodeId m : set) dsu.Union(set.front(), m);
    }
  }
  public_tree_.state_of.assign(n, -1);
  std::vector<int> index_of_rep(n, -1);
  auto& states = public_tree_.states;
  for (NodeId v = 0; v < n; ++v) {
    const int rep = dsu.Find(v);
    if (index_of_rep[rep] < 0) {
      index_of_rep[rep] = static_cast<int>(states.size());
      states.emplace_back();
    }
    public_tree_.state_of[v] = index_of_rep[rep];
    states[index_of_rep[rep]].members.push_back(v);
  }
  for (size_t s = 0; s < states.size(); ++s) {
    PublicState& state = states[s];
    std::string best;
    bool terminal = true;
    for (NodeId m : state.members) {
      std::string key = PathKey(m);
      if (best.empty() || key < best) best = std::move(key);
      terminal = terminal && nodes_[m].is_terminal();
    }
    state.id = best;
    state.terminal = terminal;
    const NodeId par = nodes_[state.members.front()].parent;
    if (par != kNoNode) {
      state.parent = public_tree_.state_of[par];
      states[state.parent].children.push_back(static_cast<int>(s));
      state.depth = states[state.parent].depth + 1;
    }
  }
}

double Game::MinUtility(int player) const {
  double best = std::numeric_limits<double>::infinity();
  for (NodeId z = 0; z < num_nodes(); ++z) {
    if (nodes_[z].is_terminal()) best = std::min(best, Utility(z, player));
  }
  return best;
}

double Game::MaxUtility(int player) const {
  double best = -std::numeric_limits<double>::infinity();
  for (NodeId z = 0; z < num_nodes(); ++z) {
    if (nodes_[z].is_terminal()) best = std::max(best, Utility(z, player));
  }
  return best;
}

std::string Game::Path(NodeId id) const {
  std::vector<const std::string*> labels;
  for (NodeId v = id; nodes_[v].parent != kNoNode; v = nodes_[v].parent) {
    labels.push_back(&nodes_[nodes_[v].parent].actions[nodes_[v].parent_action]);
  }
  std::string path;
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    if (!path.empty()) path += '/';
    path += **it;
  }
  return path;
}

std::string Game::PathKey(NodeId id) const {
  return id == root() ? std::string("<root>") : Path(id);
}

NodeId Game::FindNode(std::string_view path_key) const {
  if (path_key == "<root>" || path_key.empty()) return root();
  NodeId v = root();
  size_t start = 0;
  while (start <= path_key.size()) {
    size_t end = path_key.find('/', start);
    if (end == std::string_view::npos) end = path_key.size();
    const std::string_view label = path_key.substr(start, end - start);
    const Node& node = nodes_[v];
    auto it = std::find(node.actions.begin(), node.actions.end(), label);
    if (it == node.actions.end()) return kNoNode;
    v = node.children[it - node.actions.begin()];
    start = end + 1;
  }
  return v;
}

NodeSpec Game::ToSpec(NodeId id) const {
  const Node& node = nodes_[id];
  NodeSpec spec;
  spec.kind = node.kind;
  spec.player = node.player;
  spec.infoset = node.infoset;
  spec.actions = node.actions;
  spec.probs = node.chance_probs;
  spec.utility = node.utility;
  for (NodeId c : node.children) spec.children.push_back(ToSpec(c));
  return spec;
}

ObsActionSeq ObservationHistory(const Game& game, int player, NodeId h) {
  std::vector<NodeId> path;
  for (NodeId v = h; v != kNoNode; v = game.node(v).parent) path.push_back(v);
  std::reverse(path.begin(), path.end());
  ObsActionSeq seq;
  for (size_t i = 0; i < path.size(); ++i) {
    const Node& node = game.node(path[i]);
    if (!node.is_decision() || node.player != player) continue;
    ObsStep step{node.infoset, std::nullopt};
    if (i + 1 < path.size()) {
      step.action = node.actions[game.node(path[i + 1]).parent_action];
    }
    seq.push_back(std::move(step));
  }
  return seq;
}

std::vector<NodeId> Subgame(const Game& game, int state) {
  std::vector<NodeId> out;
  for (NodeId m : game.public_tree().states.at(state).members) {
    for (NodeId v = m; v < game.node(m).subtree_end; ++v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport ValidatePerfectRecall(const Game& game) {
  ValidationReport report;
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (const Infoset& infoset : game.infosets(p)) {
      ObsActionSeq reference =
          ObservationHistory(game, p, infoset.members.front());
      reference.pop_back();
      for (NodeId m : infoset.members) {
        ObsActionSeq seq = ObservationHistory(game, p, m);
        seq.pop_back();
        if (seq != reference) {
          report.push_back({p, infoset.label,
                            "history " + game.PathKey(m) +
                                " has a different observation-action "
                                "history than " +
                                game.PathKey(infoset.members.front())});
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace efgval
