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


#include "efgval/strategy.h"

#include <random>
#include <string>

#include "efgval/games.h"
#include "efgval/values.h"
#include "gtest/gtest.h"

namespace efgval {
namespace {

int Infoset(const Game& game, int player, const std::string& label) {
  const int index = game.FindInfoset(player, label);
  EXPECT_GE(index, 0) << label;
  return index;
}

TEST(StrategyTest, UniformIsNormalized) {
  const Game game = KuhnPoker();
  const StrategyProfile uniform = StrategyProfile::Uniform(game);
  EXPECT_EQ(MaxNormalizationError(uniform), 0.0);
  EXPECT_EQ(uniform.at(1, 0)[0], 0.5);
  EXPECT_EQ(uniform.num_infosets(1), 6);
}

TEST(StrategyTest, RandomProfilesAreDeterministicAndNormalized) {
  const Game game = KuhnPoker();
  std::mt19937_64 rng_a(42);
  std::mt19937_64 rng_b(42);
  const StrategyProfile a = StrategyProfile::Random(game, rng_a);
  const StrategyProfile b = StrategyProfile::Random(game, rng_b);
  EXPECT_EQ(a, b);
  EXPECT_LT(MaxNormalizationError(a), 1e-12);
  EXPECT_NE(a, StrategyProfile::Uniform(game));
}

TEST(StrategyTest, SetPureByLabel) {
  const Game game = MatchingPennies();
  StrategyProfile profile = StrategyProfile::Uniform(game);
  SetPureByLabel(game, profile, "2:P2", "T");
  EXPECT_EQ(profile.at(2, 0)[0], 0.0);
  EXPECT_EQ(profile.at(2, 0)[1], 1.0);
  EXPECT_THROW(SetPureByLabel(game, profile, "2:P3", "T"), EfgError);
  EXPECT_THROW(SetPureByLabel(game, profile, "2:P2", "X"), EfgError);
}

TEST(StrategyTest, ActionProbFollowsNodeInfoset) {
  const Game game = MatchingPennies();
  StrategyProfile profile = StrategyProfile::Uniform(game);
  profile.SetPure(1, 0, 1);
  EXPECT_EQ(profile.ActionProb(game, game.root(), 1), 1.0);
  EXPECT_EQ(profile.ActionProb(game, game.FindNode("H"), 0), 0.5);
}

TEST(StrategyTest, NoisyProfileMixesWithUniform) {
  const Game game = MatchingPennies();
  StrategyProfile profile = StrategyProfile::Uniform(game);
  profile.SetPure(1, 0, 0);
  const StrategyProfile noisy = NoisyProfile(game, profile, 10.0);
  EXPECT_NEAR(noisy.at(1, 0)[0], 0.95, 1e-15);
  EXPECT_NEAR(noisy.at(1, 0)[1], 0.05, 1e-15);
  EXPECT_NEAR(noisy.at(2, 0)[0], 0.5, 1e-15);
}

// One-player game: s0 chooses gamble/safe, then s1 (heads) and s2 (tails).
TEST(StrategyTest, MixRealizationWeightsSequences) {
  const Game game = MdpOnePlayer();
  const int s0 = Infoset(game, 1, "s0");
  const int s1 = Infoset(game, 1, "s1");
  const int s2 = Infoset(game, 1, "s2");
  StrategyProfile a = StrategyProfile::Uniform(game);
  a.SetPure(1, s0, 0);  // gamble
  a.SetPure(1, s1, 0);  // x
  a.SetPure(1, s2, 1);  // y
  StrategyProfile b = a;
  b.mutable_at(1, s0)[0] = 0.5;
  b.mutable_at(1, s0)[1] = 0.5;
  b.SetPure(1, s1, 1);  // y
  const StrategyProfile mix = MixRealization(game, a, b, 0.5);
  // Sequence weights: gamble 0.5 + 0.25, (gamble, x) 0.5 + 0.
  EXPECT_NEAR(mix.at(1, s0)[0], 0.75, 1e-15);
  EXPECT_NEAR(mix.at(1, s1)[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(mix.at(1, s2)[1], 1.0, 1e-15);
  // Expected utility is linear in realization weights: 0.5*0.7 + 0.5*0.45.
  EXPECT_NEAR(ExpectedUtility(game, a, 1), 0.7, 1e-15);
  EXPECT_NEAR(ExpectedUtility(game, b, 1), 0.45, 1e-15);
  EXPECT_NEAR(ExpectedUtility(game, mix, 1), 0.575, 1e-15);
}

TEST(StrategyTest, MixRealizationUnreachedIsUniform) {
  const Game game = MdpOnePlayer();
  StrategyProfile safe = StrategyProfile::Uniform(game);
  safe.SetPure(1, Infoset(game, 1, "s0"), 1);
  safe.SetPure(1, Infoset(game, 1, "s1"), 0);
  const StrategyProfile mix = MixRealization(game, safe, safe, 0.3);
  EXPECT_EQ(mix.at(1, Infoset(game, 1, "s1"))[0], 0.5);
}

TEST(StrategyTest, CopyPlayerLeavesOtherPlayer) {
  const Game game = MatchingPennies();
  StrategyProfile src = StrategyProfile::Uniform(game);
  src.SetPure(1, 0, 1);
  src.SetPure(2, 0, 1);
  StrategyProfile dst = StrategyProfile::Uniform(game);
  CopyPlayer(1, src, dst);
  EXPECT_EQ(dst.at(1, 0)[1], 1.0);
  EXPECT_EQ(dst.at(2, 0)[1], 0.5);
}

TEST(StrategyTest, WriteReadRoundTrip) {
  const Game game = KuhnPoker();
  std::mt19937_64 rng(3);
  const StrategyProfile profile = StrategyProfile::Random(game, rng);
  const std::string text = WriteStrategy(game, profile);
  EXPECT_EQ(ReadStrategy(game, text), profile);
  EXPECT_EQ(WriteStrategy(game, ReadStrategy(game, text)), text);
}

TEST(StrategyTest, WriteFormat) {
  const Game game = MatchingPennies();
  EXPECT_EQ(WriteStrategy(game, StrategyProfile::Uniform(game)),
            "1:P1\tH\t0.5\n1:P1\tT\t0.5\n2:P2\tH\t0.5\n2:P2\tT\t0.5\n");
}

TEST(StrategyTest, ReadRejectsBadInput) {
  const Game game = MatchingPennies();
  EXPECT_THROW(ReadStrategy(game, "1:P1\tH\n"), EfgError);
  EXPECT_THROW(ReadStrategy(game, "3:P1\tH\t1\n"), EfgError);
  EXPECT_THROW(ReadStrategy(game, "1:P1\tQ\t1\n"), EfgError);
  // Partial rows leave the other action at 0.5: sum 1.5.
  EXPECT_THROW(ReadStrategy(game, "1:P1\tH\t1\n"), EfgError);
  const StrategyProfile pure =
      ReadStrategy(game, "# pure\n1:P1\tH\t1\n1:P1\tT\t0\n");
  EXPECT_EQ(pure.at(1, 0)[0], 1.0);
}

}  // namespace
}  // namespace efgval
