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


#include <string>
#include <vector>

#include "efgval/games.h"
#include "efgval/range.h"
#include "efgval/reach.h"
#include "efgval/strategy.h"
#include "gtest/gtest.h"

namespace efgval {
namespace {

constexpr double kSixth = 1.0 / 6.0;

void SetBet(const Game& game, StrategyProfile& profile, int player,
            const std::string& label, double bet) {
  auto dist = profile.mutable_at(player, game.FindInfoset(player, label));
  dist[0] = 1.0 - bet;  // p
  dist[1] = bet;        // b
}

// Player 1 bets J/Q/K with 0.2/0.4/0.9 and player 2 bets after a pass with
// Q:0.3 and K:0.7; everything else uniform.
StrategyProfile KuhnProfile(const Game& game) {
  StrategyProfile profile = StrategyProfile::Uniform(game);
  SetBet(game, profile, 1, "J", 0.2);
  SetBet(game, profile, 1, "Q", 0.4);
  SetBet(game, profile, 1, "K", 0.9);
  SetBet(game, profile, 2, "Q:p", 0.3);
  SetBet(game, profile, 2, "K:p", 0.7);
  return profile;
}

int StateOf(const Game& game, const std::string& id) {
  const int state = game.public_tree().Find(id);
  EXPECT_GE(state, 0) << id;
  return state;
}

TEST(ReachTest, PathReachSplitsContributions) {
  const Game game = KuhnPoker();
  const StrategyProfile profile = KuhnProfile(game);
  const NodeId h = game.FindNode("JK/p/b");
  const ReachTriple triple = Reach(game, profile, h);
  EXPECT_NEAR(triple.own[0], 0.8, 1e-15);
  EXPECT_NEAR(triple.own[1], 0.7, 1e-15);
  EXPECT_NEAR(triple.total, 0.8 * 0.7 * kSixth, 1e-15);
  EXPECT_NEAR(triple.counterfactual[0], 0.7 * kSixth, 1e-15);
  EXPECT_NEAR(triple.counterfactual[1], 0.8 * kSixth, 1e-15);

  const ReachTable table(game, profile);
  const ReachTriple swept = table.Triple(h);
  EXPECT_NEAR(swept.total, triple.total, 1e-15);
  EXPECT_NEAR(table.Counterfactual(1, h), triple.counterfactual[0], 1e-15);
  EXPECT_NEAR(table.chance(h), kSixth, 1e-15);
}

TEST(ReachTest, ReachFromAncestorExcludesChance) {
  const Game game = KuhnPoker();
  const StrategyProfile profile = KuhnProfile(game);
  const ReachTriple triple = ReachFrom(game, profile, game.FindNode("JK"),
                                       game.FindNode("JK/p/b"));
  EXPECT_NEAR(triple.total, 0.56, 1e-15);
  EXPECT_NEAR(triple.own[0], 0.8, 1e-15);
  EXPECT_EQ(AncestorAtDepth(game, game.FindNode("JK/p/b"), 1),
            game.FindNode("JK"));
}

TEST(ReachTest, InfosetReachSumsMembers) {
  const Game game = KuhnPoker();
  const ReachTable table(game, KuhnProfile(game));
  const InfoPartition& part = game.augmented(2);
  const int set = part.Find("2@JQ/p");  // player 2 holds Q after a pass
  ASSERT_GE(set, 0);
  const InfosetReach reach = ComputeInfosetReach(game, table, 2, set);
  EXPECT_NEAR(reach.counterfactual, (0.8 + 0.1) * kSixth, 1e-15);
  EXPECT_NEAR(reach.total, (0.8 + 0.1) * kSixth, 1e-15);
  EXPECT_NEAR(reach.own, 1.0, 1e-15);
}

TEST(ReachTest, ConditionalDistributionFromTotalReach) {
  const Game game = KuhnPoker();
  const ReachTable table(game, KuhnProfile(game));
  const int set = game.augmented(2).Find("2@JQ/p");
  const std::vector<double> cond = CondDistribution(game, table, 2, set);
  ASSERT_EQ(cond.size(), 2u);
  EXPECT_NEAR(cond[0], 8.0 / 9.0, 1e-15);
  EXPECT_NEAR(cond[1], 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(CondReach(game, table, 2, set, game.FindNode("KQ/p")),
              1.0 / 9.0, 1e-15);
}

TEST(ReachTest, ConditionalDistributionFallsBackToCounterfactualReach) {
  const Game game = KuhnPoker();
  StrategyProfile profile = KuhnProfile(game);
  SetBet(game, profile, 1, "J", 1.0);  // J never passes
  const ReachTable table(game, profile);
  const int set = game.augmented(1).Find("1@JQ/p/b");
  ASSERT_GE(set, 0);
  EXPECT_EQ(ComputeInfosetReach(game, table, 1, set).total, 0.0);
  const std::vector<double> cond = CondDistribution(game, table, 1, set);
  EXPECT_NEAR(cond[0], 0.3, 1e-15);
  EXPECT_NEAR(cond[1], 0.7, 1e-15);
}

TEST(ReachTest, ConditionalDistributionFallsBackToUniformOverMembers) {
  // Chance never reaches the first two blocks, so player 2's set spanning
  // them has zero mass under every profile.
  const Game game = Thm3Chain(2, {0.0, 0.0, 1.0});
  const ReachTable table(game, StrategyProfile::Uniform(game));
  const int set = game.augmented(2).set_of[game.FindNode("h0/d/U")];
  const std::vector<double> cond = CondDistribution(game, table, 2, set);
  ASSERT_EQ(cond.size(), 4u);
  for (double c : cond) EXPECT_NEAR(c, 0.25, 1e-15);
}

TEST(RangeTest, RepresentationsAtPostPassState) {
  const Game game = KuhnPoker();
  const StrategyProfile profile = KuhnProfile(game);
  const int state = StateOf(game, "JK/p");
  const RangeBundle joint = RangeAt(game, profile, state, RangeRepr::kJoint);
  EXPECT_NEAR(joint.at("JQ/p"), 0.8 * kSixth, 1e-15);
  EXPECT_NEAR(joint.at("QJ/p"), 0.6 * kSixth, 1e-15);
  EXPECT_NEAR(joint.at("KQ/p"), 0.1 * kSixth, 1e-15);
  const RangeBundle p1 =
      RangeAt(game, profile, state, RangeRepr::kInfosetReachP1);
  EXPECT_EQ(p1.keys, (std::vector<std::string>{"1@JQ/p", "1@QJ/p", "1@KJ/p"}));
  EXPECT_NEAR(p1.at("1@KJ/p"), 0.1, 1e-15);
  const RangeBundle cf =
      RangeAt(game, profile, state, RangeRepr::kCounterfactualP2);
  EXPECT_NEAR(cf.at("2@JQ/p"), 0.9 * kSixth, 1e-15);
  EXPECT_NEAR(cf.at("2@JK/p"), 1.4 * kSixth, 1e-15);
  const RangeBundle cond =
      RangeAt(game, profile, state, RangeRepr::kConditionalP2);
  EXPECT_NEAR(cond.at("JQ/p"), 8.0 / 9.0, 1e-15);
  const RangeBundle separated =
      RangeAt(game, profile, state, RangeRepr::kSeparated);
  EXPECT_NEAR(separated.at("JK/p", 0), 0.8, 1e-15);
  EXPECT_NEAR(separated.at("JK/p", 1), 1.0, 1e-15);
  EXPECT_NEAR(separated.at("JK/p", 2), kSixth, 1e-15);
  const RangeBundle compact = RangeAt(game, profile, state, RangeRepr::kCompact);
  EXPECT_NEAR(compact.at("1@QJ/p"), 0.6, 1e-15);
  EXPECT_NEAR(compact.at("2@QJ/p"), 1.0, 1e-15);
}

TEST(RangeTest, ConversionsAgreeWithDirectComputation) {
  const Game game = KuhnPoker();
  const StrategyProfile profile = KuhnProfile(game);
  const std::vector<RangeRepr> sources = {RangeRepr::kInfosetReachP1,
                                          RangeRepr::kHistoryReachP1,
                                          RangeRepr::kHistoryReachP1Chance};
  const std::vector<RangeRepr> targets = {
      RangeRepr::kInfosetReachP1, RangeRepr::kHistoryReachP1,
      RangeRepr::kHistoryReachP1Chance, RangeRepr::kCounterfactualP2,
      RangeRepr::kConditionalP2};
  for (const PublicState& ps : game.public_tree().states) {
    const int state = game.public_tree().Find(ps.id);
    for (RangeRepr source : sources) {
      const RangeBundle from = RangeAt(game, profile, state, source);
      for (RangeRepr target : targets) {
        const RangeBundle converted = ConvertRange(game, from, target);
        const RangeBundle direct = RangeAt(game, profile, state, target);
        EXPECT_LT(RangeDistance(converted, direct), 1e-15)
            << ps.id << " " << RangeReprName(source) << " -> "
            << RangeReprName(target);
      }
    }
    const RangeBundle separated =
        RangeAt(game, profile, state, RangeRepr::kSeparated);
    for (RangeRepr target : {RangeRepr::kJoint, RangeRepr::kCompact}) {
      EXPECT_LT(RangeDistance(ConvertRange(game, separated, target),
                              RangeAt(game, profile, state, target)),
                1e-15);
    }
  }
}

TEST(RangeTest, UnsupportedConversionIsReported) {
  const Game game = KuhnPoker();
  const RangeBundle joint =
      RangeAt(game, KuhnProfile(game), StateOf(game, "JK/p"), RangeRepr::kJoint);
  try {
    ConvertRange(game, joint, RangeRepr::kSeparated);
    FAIL();
  } catch (const EfgError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

TEST(RangeTest, StateSetsListSetsInsideTheState) {
  const Game game = KuhnPoker();
  const int state = StateOf(game, "JK/p");
  const std::vector<int> sets = StateSets(game, 2, state);
  ASSERT_EQ(sets.size(), 3u);
  EXPECT_EQ(game.augmented(2).keys[sets[1]], "2@JK/p");
}

TEST(RangeTest, WriteReadRoundTrip) {
  const Game game = KuhnPoker();
  const StrategyProfile profile = KuhnProfile(game);
  for (int r = 0; r <= static_cast<int>(RangeRepr::kCompact); ++r) {
    const RangeRepr repr = static_cast<RangeRepr>(r);
    EXPECT_EQ(ParseRangeRepr(RangeReprName(repr)), repr);
    const RangeBundle bundle =
        RangeAt(game, profile, StateOf(game, "JK/p"), repr);
    const RangeBundle read = ReadRange(game, WriteRange(game, bundle));
    EXPECT_EQ(read.repr, repr);
    EXPECT_EQ(read.state, bundle.state);
    EXPECT_EQ(read.keys, bundle.keys);
    EXPECT_EQ(RangeDistance(read, bundle), 0.0);
  }
}

TEST(RangeTest, JointRangeFromMasses) {
  const Game game = Fig2cLR();
  const int state = StateOf(game, "L");
  const RangeBundle range = JointRange(game, state, {1.0, 0.0});
  EXPECT_EQ(range.keys, (std::vector<std::string>{"L", "R"}));
  EXPECT_EQ(range.at("L"), 1.0);
  EXPECT_THROW(JointRange(game, state, {1.0}), EfgError);
  EXPECT_THROW(JointRange(game, state, {1.0, -0.5}), EfgError);
  EXPECT_THROW(range.at("nowhere"), EfgError);
}

TEST(RangeTest, DistanceRequiresMatchingKeys) {
  const Game game = KuhnPoker();
  const StrategyProfile profile = KuhnProfile(game);
  const RangeBundle a = RangeAt(game, profile, StateOf(game, "JK/p"),
                                RangeRepr::kJoint);
  const RangeBundle b = RangeAt(game, profile, StateOf(game, "JK/b"),
                                RangeRepr::kJoint);
  EXPECT_THROW(RangeDistance(a, b), EfgError);
  EXPECT_EQ(RangeDistance(a, a), 0.0);
}

}  // namespace
}  // namespace efgval
