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

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "efgval/games.h"
#include "gtest/gtest.h"

namespace efgval {
namespace {

using S = NodeSpec;

std::vector<std::string> MemberKeys(const Game& game,
                                    const std::vector<NodeId>& members) {
  std::vector<std::string> keys;
  for (NodeId m : members) keys.push_back(game.PathKey(m));
  return keys;
}

const PublicState& StateById(const Game& game, const std::string& id) {
  const int s = game.public_tree().Find(id);
  EXPECT_GE(s, 0) << id;
  return game.public_tree().states.at(s);
}

TEST(GameTest, KuhnNodeAndInfosetCounts) {
  const Game game = KuhnPoker();
  // Root deal plus six deals of nine nodes each.
  EXPECT_EQ(game.num_nodes(), 55);
  EXPECT_EQ(game.infosets(1).size(), 6u);
  EXPECT_EQ(game.infosets(2).size(), 6u);
  EXPECT_TRUE(game.node(game.root()).is_chance());
  EXPECT_EQ(game.node(game.root()).num_actions(), 6);
}

TEST(GameTest, KuhnSecondPlayerSetsGroupedByOwnCard) {
  const Game game = KuhnPoker();
  const InfoPartition& part = game.augmented(2);
  std::vector<std::vector<std::string>> deal_sets;
  for (int s = 0; s < part.size(); ++s) {
    if (part.depth[s] == 1) {
      deal_sets.push_back(MemberKeys(game, part.sets[s]));
    }
  }
  const std::vector<std::vector<std::string>> expected = {
      {"JQ", "KQ"}, {"JK", "QK"}, {"QJ", "KJ"}};
  EXPECT_EQ(deal_sets, expected);
}

TEST(GameTest, KuhnPostDealPublicStateHasAllDeals) {
  const Game game = KuhnPoker();
  const PublicState& state = StateById(game, "JK");
  EXPECT_EQ(state.members.size(), 6u);
  EXPECT_FALSE(state.terminal);
  EXPECT_EQ(state.depth, 1);
}

TEST(GameTest, AugmentedSetsAreTopologicallyOrdered) {
  for (const std::string& name : CatalogNames()) {
    const Game game = BuildGame(name);
    for (int p = 1; p <= kNumPlayers; ++p) {
      const InfoPartition& part = game.augmented(p);
      for (int s = 0; s < part.size(); ++s) {
        if (part.parent[s] >= 0) {
          EXPECT_LT(part.parent[s], s) << name;
        }
        for (NodeId m : part.sets[s]) EXPECT_EQ(part.set_of[m], s);
      }
    }
  }
}

TEST(GameTest, AugmentedSetsRefineDeclaredInfosets) {
  for (const std::string& name : CatalogNames()) {
    const Game game = BuildGame(name);
    for (int p = 1; p <= kNumPlayers; ++p) {
      const InfoPartition& part = game.augmented(p);
      for (int i = 0; i < static_cast<int>(game.infosets(p).size()); ++i) {
        const Infoset& infoset = game.infoset(p, i);
        const int s = part.set_of[infoset.members.front()];
        EXPECT_EQ(part.sets[s], infoset.members) << name << " " << i;
        EXPECT_EQ(part.declared[s], i);
      }
    }
  }
}

TEST(GameTest, Fig1HasTwoInnerPublicStates) {
  const Game game = Fig1Tradeoff();
  int inner = 0;
  for (const PublicState& state : game.public_tree().states) {
    if (!state.terminal && state.parent >= 0) ++inner;
  }
  EXPECT_EQ(inner, 2);
  EXPECT_EQ(StateById(game, "g1").members.size(), 2u);
  EXPECT_EQ(StateById(game, "g1/a").members.size(), 4u);
}

TEST(GameTest, Fig2bSharedInfosetSpansBothBranches) {
  const Game game = Fig2bPrepare();
  const PublicState& state = StateById(game, "PfA/A");
  EXPECT_EQ(MemberKeys(game, state.members),
            (std::vector<std::string>{"PfA/A", "PfB/A"}));
}

TEST(GameTest, Thm3BottomStateHoldsEveryBlock) {
  const Game game = Thm3Chain(2, {0.3, 0.4, 0.3});
  EXPECT_EQ(StateById(game, "h0").members.size(), 3u);
  EXPECT_EQ(StateById(game, "h0/d").members.size(), 3u);
}

TEST(GameTest, PathKeysRoundTrip) {
  const Game game = KuhnPoker();
  for (NodeId v = 0; v < game.num_nodes(); ++v) {
    EXPECT_EQ(game.FindNode(game.PathKey(v)), v);
  }
  EXPECT_EQ(game.PathKey(game.root()), "<root>");
}

TEST(GameTest, SubtreeRangesAreContiguous) {
  const Game game = KuhnPoker();
  const NodeId deal = game.FindNode("QK");
  for (NodeId v = 0; v < game.num_nodes(); ++v) {
    const bool below = game.PathKey(v).rfind("QK", 0) == 0;
    EXPECT_EQ(game.IsPrefix(deal, v), below) << game.PathKey(v);
  }
}

TEST(GameTest, UtilitiesAreZeroSum) {
  const Game game = PerfectInfoDuel();
  for (NodeId v = 0; v < game.num_nodes(); ++v) {
    if (game.node(v).is_terminal()) {
      EXPECT_EQ(game.Utility(v, 1), -game.Utility(v, 2));
    }
  }
  EXPECT_EQ(game.MaxUtility(1), 3.0);
  EXPECT_EQ(game.MinUtility(1), -1.0);
}

TEST(GameTest, ObservationHistoryRecordsOwnActions) {
  const Game game = KuhnPoker();
  const ObsActionSeq seq = ObservationHistory(game, 1, game.FindNode("KQ/p/b"));
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[0].action, std::optional<std::string>("p"));
  EXPECT_EQ(seq[1].action, std::nullopt);
  EXPECT_EQ(seq[0].infoset, game.node(game.FindNode("KQ")).infoset);
}

TEST(GameTest, SubgameContainsMemberSubtrees) {
  const Game game = Fig2cLR();
  const int state = game.public_tree().Find("L");
  const std::vector<NodeId> nodes = Subgame(game, state);
  for (NodeId v : nodes) {
    const std::string key = game.PathKey(v);
    EXPECT_TRUE(key.rfind("L", 0) == 0 || key.rfind("R", 0) == 0) << key;
  }
  EXPECT_EQ(nodes.size(), static_cast<size_t>(game.num_nodes() - 1));
}

TEST(GameTest, CatalogGamesHavePerfectRecall) {
  for (const std::string& name : CatalogNames()) {
    EXPECT_TRUE(ValidatePerfectRecall(BuildGame(name)).empty()) << name;
  }
}

TEST(GameTest, ForgetfulPlayerIsReported) {
  const S forget = S::Decision(1, "X", {{"x", S::Terminal(1)},
                                        {"y", S::Terminal(0)}});
  const S root = S::Decision(1, "R", {{"a", forget}, {"b", forget}});
  const Game game = Game::FromSpec("forgetful", root);
  const ValidationReport report = ValidatePerfectRecall(game);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report[0].player, 1);
  EXPECT_EQ(report[0].infoset, "X");
}

TEST(GameTest, RejectsThickInfoset) {
  const S inner = S::Decision(1, "X", {{"a", S::Terminal(1)},
                                       {"b", S::Terminal(0)}});
  const S root = S::Decision(1, "X", {{"a", inner}, {"b", S::Terminal(0)}});
  try {
    Game::FromSpec("thick", root);
    FAIL() << "expected an error";
  } catch (const EfgError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kThickInfoset);
  }
}

TEST(GameTest, RejectsDifferingActionLists) {
  const S x1 = S::Decision(2, "Y", {{"a", S::Terminal(1)},
                                    {"b", S::Terminal(0)}});
  const S x2 = S::Decision(2, "Y", {{"a", S::Terminal(1)},
                                    {"c", S::Terminal(0)}});
  const S root = S::Decision(1, "R", {{"l", x1}, {"r", x2}});
  try {
    Game::FromSpec("bad", root);
    FAIL() << "expected an error";
  } catch (const EfgError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInconsistentInfoset);
  }
}

TEST(GameTest, RejectsChanceProbabilitiesNotSummingToOne) {
  const S root = S::Chance({{"a", 0.5, S::Terminal(1)},
                            {"b", 0.4, S::Terminal(0)}});
  try {
    Game::FromSpec("bad", root);
    FAIL() << "expected an error";
  } catch (const EfgError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kChanceProbabilities);
  }
}

TEST(GameTest, RejectsDuplicateActionLabels) {
  const S root = S::Decision(1, "R", {{"a", S::Terminal(1)},
                                      {"a", S::Terminal(0)}});
  EXPECT_THROW(Game::FromSpec("bad", root), EfgError);
}

TEST(GameTest, RejectsNonFiniteUtility) {
  const S root = S::Decision(
      1, "R", {{"a", S::Terminal(std::numeric_limits<double>::infinity())}, {"b", S::Terminal(0)}});
  EXPECT_THROW(Game::FromSpec("bad", root), EfgError);
}

}  // namespace
}  // namespace efgval
