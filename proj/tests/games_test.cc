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


#include "efgval/games.h"

#include <string>
#include <vector>

#include "efgval/game.h"
#include "efgval/oracle.h"
#include "gtest/gtest.h"

namespace efgval {
namespace {

// Game values derived by hand for every builtin game.
TEST(GamesTest, GameValues) {
  const std::vector<std::pair<std::string, double>> expected = {
      {"matching_pennies", 0.5},
      {"kuhn_poker", -1.0 / 18.0},
      {"fig1_tradeoff", 0.0},
      {"fig2a_infoset_values", 0.5},
      {"fig2b_prepare", 0.5},
      {"fig2c_LR", 1.0},
      {"fig4_left_oneplayer", 0.5},
      // Player 2 plays L with probability 7/8: 0.7 - 0.1 * 7/8.
      {"thm3_chain", 0.6125},
      // Gamble: 0.5 * 1 + 0.5 * 0.4 beats the safe 0.6.
      {"mdp_oneplayer", 0.7},
      // Backward induction: l -> min(3, -1), r -> min(0, 2).
      {"perfect_info_duel", 0.0},
  };
  for (const auto& [name, value] : expected) {
    EXPECT_NEAR(GameValue(BuildGame(name)), value, 1e-12) << name;
  }
}

TEST(GamesTest, CatalogAndExtrasBuild) {
  EXPECT_EQ(CatalogNames().size(), 8u);
  for (const std::string& name : CatalogNames()) {
    EXPECT_EQ(BuildGame(name).name(), name);
  }
  for (const std::string& name : ExtraGameNames()) {
    EXPECT_EQ(BuildGame(name).name(), name);
  }
}

TEST(GamesTest, UnknownNameIsAnError) {
  try {
    BuildGame("chess");
    FAIL();
  } catch (const EfgError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownKey);
  }
}

TEST(GamesTest, KuhnDealsAreUniform) {
  const Game game = KuhnPoker();
  for (double p : game.node(game.root()).chance_probs) {
    EXPECT_DOUBLE_EQ(p, 1.0 / 6.0);
  }
}

TEST(GamesTest, ChainLinksEndWithTheFirstPlayer) {
  EXPECT_EQ(Thm3LinkPlayer(2, 1), 1);
  EXPECT_EQ(Thm3LinkPlayer(2, 0), 2);
  EXPECT_EQ(Thm3LinkPlayer(3, 0), 1);
  const Game game = Thm3Chain(2, {0.3, 0.4, 0.3});
  EXPECT_EQ(game.infosets(1).size(), 2u);
  EXPECT_EQ(game.infosets(2).size(), 1u);
  // Blocks 1 and 2 share player 1's set; blocks 0 and 1 share player 2's.
  EXPECT_EQ(game.infoset(1, game.FindInfoset(1, "X1")).members.size(), 2u);
  EXPECT_EQ(game.infoset(2, game.FindInfoset(2, "Y0")).members.size(), 4u);
}

TEST(GamesTest, ChainWeightsAreNormalized) {
  const Game game = Thm3Chain(2, {3, 4, 3});
  const std::vector<double>& probs = game.node(game.root()).chance_probs;
  ASSERT_EQ(probs.size(), 3u);
  EXPECT_NEAR(probs[0], 0.3, 1e-15);
  EXPECT_NEAR(probs[1], 0.4, 1e-15);
  EXPECT_NEAR(probs[2], 0.3, 1e-15);
  GameParams params;
  params.n = 4;
  EXPECT_EQ(BuildGame("thm3_chain", params).node(0).num_actions(), 5);
}

TEST(GamesTest, ChainRejectsBadWeights) {
  EXPECT_THROW(Thm3Chain(2, {1, 1}), EfgError);
  EXPECT_THROW(Thm3Chain(2, {1, -1, 1}), EfgError);
  EXPECT_THROW(Thm3Chain(2, {0, 0, 0}), EfgError);
  EXPECT_THROW(Thm3Chain(0, {}), EfgError);
}

}  // namespace
}  // namespace efgval
