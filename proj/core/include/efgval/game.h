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

#ifndef EFGVAL_GAME_H_
#define EFGVAL_GAME_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace efgval {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;
inline constexpr int kChancePlayer = 0;
inline constexpr int kNumPlayers = 2;

enum class ErrorCode {
  kSyntax,
  kStructure,
  kInconsistentInfoset,
  kChanceProbabilities,
  kThickInfoset,
  kUnknownKey,
  kInvalidArgument,
  kUnsupported,
  kInfeasibleRange,
  kCapExceeded,
  kIo,
};

// All library failures are reported through this exception.
class EfgError : public std::runtime_error {
 public:
  EfgError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class NodeKind { kChance, kDecision, kTerminal };

// Recursive, mutable description of a tree. Games are built from a NodeSpec
// and then frozen into a Game.
struct NodeSpec {
  NodeKind kind = NodeKind::kTerminal;
  int player = kChancePlayer;
  std::string infoset;
  std::vector<std::string> actions;
  std::vector<double> probs;
  std::vector<NodeSpec> children;
  double utility = 0.0;

  static NodeSpec Terminal(double utility);
  static NodeSpec Decision(int player, std::string infoset,
                           std::vector<std::pair<std::string, NodeSpec>> moves);
  static NodeSpec Chance(
      std::vector<std::tuple<std::string, double, NodeSpec>> outcomes);
};

struct Node {
  NodeKind kind = NodeKind::kTerminal;
  int player = kChancePlayer;
  std::string infoset;
  int infoset_index = -1;  // index into Game::infosets(player)
  std::vector<std::string> actions;
  std::vector<NodeId> children;
  std::vector<double> chance_probs;
  double utility = 0.0;  // player 1; player 2 receives the negation
  NodeId parent = kNoNode;
  int parent_action = -1;
  int depth = 0;
  NodeId subtree_end = 0;  // one past the last node of the subtree

  bool is_terminal() const { return kind == NodeKind::kTerminal; }
  bool is_chance() const { return kind == NodeKind::kChance; }
  bool is_decision() const { return kind == NodeKind::kDecision; }
  int num_actions() const { return static_cast<int>(children.size()); }
};

// A declared information set of an acting player.
struct Infoset {
  int player = 1;
  std::string label;
  std::vector<std::string> actions;
  std::vector<NodeId> members;  // depth-first document order
  int num_actions() const { return static_cast<int>(actions.size()); }
};

struct ObsStep {
  std::string infoset;
  std::optional<std::string> action;
  bool operator==(const ObsStep&) const = default;
};
using ObsActionSeq = std::vector<ObsStep>;

// Partition of all histories into augmented information sets of one player,
// together with the tree order between the sets.
struct InfoPartition {
  int player = 1;
  std::vector<std::vector<NodeId>> sets;  // ordered by first member
  std::vector<int> set_of;                // node -> set
  std::vector<int> parent;                // -1 for the root set
  std::vector<int> parent_action;  // action index when parent is a decision set
  std::vector<std::vector<int>> children;
  std::vector<int> depth;
  std::vector<int> declared;  // declared infoset index for decision sets, else -1
  std::vector<std::string> keys;

  int size() const { return static_cast<int>(sets.size()); }
  bool is_decision(int s) const { return declared[s] >= 0; }
  // Returns true iff set a lies on the path from the root set to set b.
  bool Precedes(int a, int b) const;
  int Find(std::string_view key) const;
};

struct PublicState {
  std::string id;
  std::vector<NodeId> members;
  int parent = -1;
  std::vector<int> children;
  int depth = 0;
  bool terminal = false;
};

struct PublicTree {
  std::vector<PublicState> states;  // ordered by first member
  std::vector<int> state_of;

  int size() const { return static_cast<int>(states.size()); }
  int Find(std::string_view id) const;
};

// An immutable two-player zero-sum extensive-form game together with its
// derived augmented partitions and public tree. Node ids follow depth-first
// document order, so every subtree occupies a contiguous id range.
class Game {
 public:
  // Validates the tree and derives all structures; throws EfgError.
  static Game FromSpec(std::string name, const NodeSpec& root);

  const std::string& name() const { return name_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const Node& node(NodeId id) const { return nodes_[id]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  NodeId root() const { return 0; }

  const std::vector<Infoset>& infosets(int player) const {
    return infosets_[player - 1];
  }
  const Infoset& infoset(int player, int index) const {
    return infosets_[player - 1][index];
  }
  int FindInfoset(int player, std::string_view label) const;

  const InfoPartition& augmented(int player) const {
    return augmented_[player - 1];
  }
  const PublicTree& public_tree() const { return public_tree_; }

  // g ⊑ h: g equals or is a prefix of h.
  bool IsPrefix(NodeId g, NodeId h) const {
    return g <= h && h < nodes_[g].subtree_end;
  }
  double Utility(NodeId z, int player) const {
    return player == 1 ? nodes_[z].utility : -nodes_[z].utility;
  }
  double MinUtility(int player) const;
  double MaxUtility(int player) const;

  // Action labels from the root joined by '/'; the root has the empty path.
  std::string Path(NodeId id) const;
  // Path, with the root written as "<root>".
  std::string PathKey(NodeId id) const;
  NodeId FindNode(std::string_view path_key) const;

  NodeSpec ToSpec(NodeId id) const;
  NodeSpec ToSpec() const { return ToSpec(root()); }

 private:
  Game() = default;
  void Flatten(const NodeSpec& spec, NodeId parent, int parent_action,
               int depth, const std::string& where);
  void CollectInfosets();
  void DeriveAugmented(int player);
  void DerivePublicTree();

  std::string name_;
  std::vector<Node> nodes_;
  std::vector<Infoset> infosets_[kNumPlayers];
  InfoPartition augmented_[kNumPlayers];
  PublicTree public_tree_;
};

ObsActionSeq ObservationHistory(const Game& game, int player, NodeId h);

// All histories at or below some member of the public state.
std::vector<NodeId> Subgame(const Game& game, int state);

struct ValidationIssue {
  int player = 0;
  std::string infoset;
  std::string detail;
};
using ValidationReport = std::vector<ValidationIssue>;

ValidationReport ValidatePerfectRecall(const Game& game);

}  // namespace efgval

#endif  // EFGVAL_GAME_H_
