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


#include "efgval/values.h"

#include <random>
#include <string>
#include <vector>

#include "efgval/games.h"
#include "gtest/gtest.h"

namespace efgval {
namespace {

// Player 1 plays H with 0.3, player 2 plays H with 0.6.
StrategyProfile PenniesProfile(const Game& game) {
  StrategyProfile profile = StrategyProfile::Uniform(game);
  profile.mutable_at(1, 0)[0] = 0.3;
  profile.mutable_at(1, 0)[1] = 0.7;
  profile.mutable_at(2, 0)[0] = 0.6;
  profile.mutable_at(2, 0)[1] = 0.4;
  return profile;
}

int SetOf(const Game& game, int player, const std::string& path) {
  return game.augmented(player).set_of[game.FindNode(path)];
}

TEST(ValuesTest, MatchingPenniesHistoryValues) {
  const Game game = MatchingPennies();
  const StrategyProfile profile = PenniesProfile(game);
  EXPECT_NEAR(HistoryValue(game, profile, 1, game.root()), 0.46, 1e-15);
  EXPECT_NEAR(HistoryValue(game, profile, 1, game.FindNode("H")), 0.6, 1e-15);
  EXPECT_NEAR(HistoryValue(game, profile, 2, game.FindNode("T")), -0.4, 1e-15);
  EXPECT_NEAR(ActionValue(game, profile, 1, game.root(), 1), 0.4, 1e-15);
  EXPECT_NEAR(ExpectedUtility(game, profile, 2), -0.46, 1e-15);
  const std::vector<double> all = HistoryValues(game, profile, 1);
  EXPECT_NEAR(all[game.FindNode("H/T")], 0.0, 1e-15);
}

TEST(ValuesTest, MatchingPenniesCounterfactualValues) {
  const Game game = MatchingPennies();
  const StrategyProfile profile = PenniesProfile(game);
  const NodeId h = game.FindNode("H");
  EXPECT_NEAR(CfHistoryValue(game, profile, 2, h), 0.3 * -0.6, 1e-15);
  EXPECT_NEAR(CfActionValue(game, profile, 2, h, 0), -0.3, 1e-15);
  const int set = SetOf(game, 2, "H");
  EXPECT_NEAR(CfInfosetValue(game, profile, 2, set), -0.46, 1e-15);
  EXPECT_NEAR(InfosetValue(game, profile, 2, set), -0.46, 1e-15);
  // Q(J, H) = 0.3 * (-1) + 0.7 * 0.
  EXPECT_NEAR(CfInfosetActionValue(game, profile, 2, set, 0), -0.3, 1e-15);
}

TEST(ValuesTest, NormalizedValueDividesByReach) {
  const Game game = MatchingPennies();
  const StrategyProfile profile = PenniesProfile(game);
  // Player 1's singleton set {H}: reach 0.3, value 0.6.
  const int set = SetOf(game, 1, "H");
  EXPECT_NEAR(InfosetValue(game, profile, 1, set), 0.6, 1e-15);
  EXPECT_NEAR(CfInfosetValue(game, profile, 1, set), 0.6, 1e-15);
  const std::vector<double> cf =
      InfosetValues(game, profile, 1, ValueKind::kCounterfactual);
  EXPECT_NEAR(cf[set], 0.6, 1e-15);
}

TEST(ValuesTest, OnePlayerCounterfactualValueIgnoresOwnStrategy) {
  const Game game = Fig4LeftOnePlayer();
  const int set = SetOf(game, 1, "A");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const StrategyProfile profile = StrategyProfile::Random(game, rng);
    EXPECT_NEAR(CfInfosetValue(game, profile, 1, set), 0.5, 1e-15);
  }
}

TEST(ValuesTest, ValueVectorsAndFormat) {
  const Game game = Fig2cLR();
  const StrategyProfile profile = StrategyProfile::Uniform(game);
  const ValueVector vector =
      InfosetValueVector(game, profile, 1, ValueKind::kNormalized);
  EXPECT_EQ(vector.size(), game.augmented(1).size());
  EXPECT_EQ(vector.keys.front(), "1@<root>");
  const std::string text = WriteValueVector(vector);
  EXPECT_EQ(text.rfind("# player 1, normalized, infoset\n1@<root>\t", 0), 0u);
  const ValueVector histories = HistoryValueVector(
      game, profile, 2, ValueKind::kCounterfactual,
      {game.FindNode("L"), game.FindNode("R")});
  EXPECT_EQ(histories.keys, (std::vector<std::string>{"L", "R"}));
  EXPECT_THROW(vector.at("missing"), EfgError);
  EXPECT_THROW(MaxAbsDifference(vector, histories), EfgError);
  EXPECT_EQ(MaxAbsDifference(vector, vector), 0.0);
}

TEST(ValuesTest, AxiomsHoldForTrueValues) {
  const Game game = KuhnPoker();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    const StrategyProfile profile = StrategyProfile::Random(game, rng);
    for (int p = 1; p <= kNumPlayers; ++p) {
      for (ValueKind kind :
           {ValueKind::kNormalized, ValueKind::kCounterfactual}) {
        const AxiomReport report = CheckValueAxioms(
            game, profile, p, InfosetValueVector(game, profile, p, kind));
        EXPECT_TRUE(report.passed()) << report.MaxResidual();
        EXPECT_LT(report.MaxResidual(), 1e-12);
      }
    }
  }
}

TEST(ValuesTest, AxiomsDetectPerturbation) {
  const Game game = KuhnPoker();
  const StrategyProfile profile = StrategyProfile::Uniform(game);
  ValueVector values =
      InfosetValueVector(game, profile, 2, ValueKind::kCounterfactual);
  values.values[3] += 0.1;
  const AxiomReport report = CheckValueAxioms(game, profile, 2, values);
  EXPECT_FALSE(report.passed());
  EXPECT_NEAR(report.MaxResidual("definition"), 0.1, 1e-12);
  EXPECT_FALSE(report.Violations().empty());
}

TEST(ValuesTest, BestResponseOnePlayer) {
  const Game game = MdpOnePlayer();
  const BestResponseResult br =
      BestResponse(game, StrategyProfile::Uniform(game), 1);
  EXPECT_NEAR(br.value, 0.7, 1e-15);
  EXPECT_NEAR(br.sweep_value, 0.7, 1e-15);
  EXPECT_EQ(br.strategy.at(1, game.FindInfoset(1, "s0"))[0], 1.0);
  EXPECT_EQ(br.strategy.at(1, game.FindInfoset(1, "s2"))[1], 1.0);
}

TEST(ValuesTest, BestResponseTwoPlayers) {
  const Game game = PerfectInfoDuel();
  const StrategyProfile uniform = StrategyProfile::Uniform(game);
  // Against uniform player 2 both actions are worth 1; ties go to l.
  const BestResponseResult br1 = BestResponse(game, uniform, 1);
  EXPECT_NEAR(br1.value, 1.0, 1e-15);
  EXPECT_EQ(br1.strategy.at(1, 0)[0], 1.0);
  // Player 2 answers l with y (gains 1) and r with x (gains 0).
  const BestResponseResult br2 = BestResponse(game, uniform, 2);
  EXPECT_NEAR(br2.value, 0.5, 1e-15);
  EXPECT_NEAR(Exploitability(game, uniform), 0.75, 1e-15);
}

TEST(ValuesTest, ExploitabilityOfPenniesProfiles) {
  const Game game = MatchingPennies();
  EXPECT_NEAR(Exploitability(game, StrategyProfile::Uniform(game)), 0.0,
              1e-15);
  StrategyProfile pure = StrategyProfile::Uniform(game);
  pure.SetPure(1, 0, 0);
  pure.SetPure(2, 0, 0);
  EXPECT_NEAR(Exploitability(game, pure), 0.5, 1e-15);
}

TEST(ValuesTest, CounterfactualBestResponseWeightOverrides) {
  const Game game = MatchingPennies();
  const StrategyProfile uniform = StrategyProfile::Uniform(game);
  const int set = SetOf(game, 2, "H");
  const std::string key = game.augmented(2).keys[set];
  const BestResponseResult plain = CfBestResponse(game, uniform, 2);
  EXPECT_NEAR(plain.cf_values.at(key), -0.5, 1e-15);
  // With no weight on H, player 2 answers the remaining T with H.
  const BestResponseResult weighted =
      CfBestResponse(game, uniform, 2, {{game.FindNode("H"), 0.0}});
  EXPECT_NEAR(weighted.cf_values.at(key), 0.0, 1e-15);
  EXPECT_EQ(weighted.strategy.at(2, 0)[0], 1.0);
}

TEST(ValuesTest, BestResponseValuesBoundGameValue) {
  const Game game = KuhnPoker();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    const StrategyProfile profile = StrategyProfile::Random(game, rng);
    EXPECT_GE(BestResponse(game, profile, 1).value, -1.0 / 18.0 - 1e-12);
    EXPECT_GE(BestResponse(game, profile, 2).value, 1.0 / 18.0 - 1e-12);
    EXPECT_GE(Exploitability(game, profile), 0.0);
  }
}

}  // namespace
}  // namespace efgval
