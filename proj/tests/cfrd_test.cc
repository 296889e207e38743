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


#include <cmath>
#include <map>
#include <string>

#include "efgval/cfr.h"
#include "efgval/games.h"
#include "efgval/range.h"
#include "efgval/resolve.h"
#include "efgval/values.h"
#include "gtest/gtest.h"

namespace efgval {
namespace {

ResolveOptions Tolerance(double epsilon) {
  ResolveOptions options;
  options.epsilon = epsilon;
  return options;
}

double MaxStrategyDifference(const Game& game, const StrategyProfile& a,
                             const StrategyProfile& b) {
  double worst = 0.0;
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < static_cast<int>(game.infosets(p).size()); ++i) {
      for (int k = 0; k < game.infoset(p, i).num_actions(); ++k) {
        worst = std::max(worst, std::abs(a.at(p, i)[k] - b.at(p, i)[k]));
      }
    }
  }
  return worst;
}

TEST(CfrdTest, WholeGameTrunkMatchesCfr) {
  const Game game = KuhnPoker();
  const TrunkSpec trunk = TrunkSpec::FromDepth(game, 100);
  ASSERT_TRUE(trunk.bottom_states.empty());
  CfrdOptions options;
  options.iterations = 200;
  const CfrdResult cfrd =
      CfrdSolve(game, trunk, MakeExactOracle(Tolerance(1e-4)), options);
  CfrOptions cfr_options;
  cfr_options.iterations = 200;
  const CfrResult cfr = SolveCfr(game, cfr_options);
  EXPECT_LT(MaxStrategyDifference(game, cfrd.trunk_strategy, cfr.strategy),
            1e-12);
  EXPECT_EQ(cfrd.oracle_calls, 0);
}

TEST(CfrdTest, KuhnChanceTrunkNeedsOneOracleCall) {
  const Game game = KuhnPoker();
  const TrunkSpec trunk = TrunkSpec::FromDepth(game, 1);
  const ResolveOptions resolve = Tolerance(1e-3);
  CfrdOptions options;
  options.iterations = 20;
  const CfrdResult result =
      CfrdSolve(game, trunk, MakeExactOracle(resolve), options);
  // The range at the deal never changes: one call, the rest are cache hits.
  EXPECT_EQ(result.oracle_calls, 1);
  EXPECT_GE(result.cache_hits, 19);
  const StrategyProfile full =
      CompleteTrunkProfile(game, trunk, result.trunk_strategy, resolve);
  EXPECT_LE(Exploitability(game, full), 1e-3 + 1e-12);
}

TEST(CfrdTest, MemoizationCanBeDisabled) {
  const Game game = KuhnPoker();
  const TrunkSpec trunk = TrunkSpec::FromDepth(game, 1);
  CfrdOptions options;
  options.iterations = 3;
  options.memoize = false;
  options.record_trace = false;
  const CfrdResult result =
      CfrdSolve(game, trunk, MakeExactOracle(Tolerance(1e-2)), options);
  EXPECT_EQ(result.oracle_calls, 4);  // three sweeps plus the final estimate
  EXPECT_EQ(result.cache_hits, 0);
  // Only the final iteration is recorded.
  ASSERT_EQ(result.diagnostics.trace.size(), 1u);
  EXPECT_EQ(result.diagnostics.trace[0].first, 3);
}

TEST(CfrdTest, Fig2bFirstDecisionTrunk) {
  const Game game = Fig2bPrepare();
  const TrunkSpec trunk = TrunkSpec::FromDepth(game, 1);
  const ResolveOptions resolve = Tolerance(1e-4);
  CfrdOptions options;
  options.iterations = 1000;
  const CfrdResult result =
      CfrdSolve(game, trunk, MakeExactOracle(resolve), options);
  const StrategyProfile full =
      CompleteTrunkProfile(game, trunk, result.trunk_strategy, resolve);
  EXPECT_LE(Exploitability(game, full), 1e-3);
  EXPECT_NEAR(ExpectedUtility(game, full, 1), 0.5, 1e-3);
}

TEST(CfrdTest, ConstantOracleAgreesWithExactOracle) {
  // Above the player-2 state of fig. 1 the trunk is the whole game minus the
  // subgame; every profile is an equilibrium of this game.
  const Game game = Fig1Tradeoff();
  const int state = game.public_tree().Find("g1/a");
  const TrunkSpec trunk = TrunkSpec::AboveState(game, state);
  const ResolveOptions resolve = Tolerance(1e-4);
  const RangeBundle range = RangeAt(game, StrategyProfile::Uniform(game), state,
                                    RangeRepr::kSeparated);
  const SubgameSolution solution =
      ExactSubgameSolve(game, range, nullptr, resolve);
  CfrdOptions options;
  options.iterations = 50;
  const CfrdResult constant = CfrdSolve(
      game, trunk, MakeConstantOracle({{state, solution}}), options);
  const StrategyProfile full =
      CompleteTrunkProfile(game, trunk, constant.trunk_strategy, resolve);
  EXPECT_LE(Exploitability(game, full), 1e-3);
}

TEST(CfrdTest, Deterministic) {
  const Game game = Fig2bPrepare();
  const TrunkSpec trunk = TrunkSpec::FromDepth(game, 1);
  CfrdOptions options;
  options.iterations = 100;
  const CfrdResult a = CfrdSolve(game, trunk, MakeExactOracle({}), options);
  const CfrdResult b = CfrdSolve(game, trunk, MakeExactOracle({}), options);
  EXPECT_EQ(a.trunk_strategy, b.trunk_strategy);
  EXPECT_EQ(a.diagnostics.trace, b.diagnostics.trace);
}

// Kuhn with the first player-1 decision in the trunk, at a reduced budget:
// the run completes and improves on uniform play.
TEST(CfrdTest, KuhnFirstDecisionTrunkSmoke) {
  const Game game = KuhnPoker();
  const TrunkSpec trunk = TrunkSpec::FromDepth(game, 2);
  EXPECT_EQ(trunk.bottom_states.size(), 4u);
  const ResolveOptions resolve = Tolerance(1e-2);
  CfrdOptions options;
  options.iterations = 10;
  const CfrdResult result =
      CfrdSolve(game, trunk, MakeExactOracle(resolve), options);
  EXPECT_GT(result.oracle_calls, 0);
  const StrategyProfile full =
      CompleteTrunkProfile(game, trunk, result.trunk_strategy, resolve);
  const double exploitability = Exploitability(game, full);
  EXPECT_TRUE(std::isfinite(exploitability));
  EXPECT_LT(exploitability,
            Exploitability(game, StrategyProfile::Uniform(game)));
}

}  // namespace
}  // namespace efgval
