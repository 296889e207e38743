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


#include <random>

#include "benchmark/benchmark.h"
#include "efgval/cfr.h"
#include "efgval/games.h"
#include "efgval/oracle.h"
#include "efgval/range.h"
#include "efgval/resolve.h"
#include "efgval/values.h"

namespace efgval {
namespace {

void BM_CfrIterationKuhn(benchmark::State& state) {
  const Game game = KuhnPoker();
  RegretTable table(game);
  for (auto _ : state) {
    CfrIteration(game, table);
    benchmark::DoNotOptimize(table.regrets(1, 0).data());
  }
}
BENCHMARK(BM_CfrIterationKuhn);

void BM_ExploitabilityKuhn(benchmark::State& state) {
  const Game game = KuhnPoker();
  std::mt19937_64 rng(1);
  const StrategyProfile profile = StrategyProfile::Random(game, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Exploitability(game, profile));
  }
}
BENCHMARK(BM_ExploitabilityKuhn);

void BM_InfosetValuesKuhn(benchmark::State& state) {
  const Game game = KuhnPoker();
  const StrategyProfile profile = StrategyProfile::Uniform(game);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        InfosetValues(game, profile, 1, ValueKind::kCounterfactual));
  }
}
BENCHMARK(BM_InfosetValuesKuhn);

void BM_RangeAtKuhn(benchmark::State& state) {
  const Game game = KuhnPoker();
  const StrategyProfile profile = StrategyProfile::Uniform(game);
  const int public_state = game.public_tree().Find("JK/p");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RangeAt(game, profile, public_state, RangeRepr::kSeparated));
  }
}
BENCHMARK(BM_RangeAtKuhn);

void BM_NormalFormSolveKuhn(benchmark::State& state) {
  const Game game = KuhnPoker();
  for (auto _ : state) {
    benchmark::DoNotOptimize(GameValue(game));
  }
}
BENCHMARK(BM_NormalFormSolveKuhn)->Unit(benchmark::kMillisecond);

void BM_GadgetSolveKuhnBet(benchmark::State& state) {
  const Game game = KuhnPoker();
  const int public_state = game.public_tree().Find("JK/b");
  const RangeBundle range = RangeAt(game, StrategyProfile::Uniform(game),
                                    public_state, RangeRepr::kSeparated);
  ResolveOptions options;
  options.epsilon = 1e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExactSubgameSolve(game, range, nullptr, options));
  }
}
BENCHMARK(BM_GadgetSolveKuhnBet)->Unit(benchmark::kMicrosecond);

void BM_CrosRefinementFig2c(benchmark::State& state) {
  const Game game = Fig2cLR();
  StrategyProfile trunk = StrategyProfile::Uniform(game);
  trunk.SetPure(1, 0, 0);
  const int public_state = game.public_tree().Find("L");
  ResolveOptions options;
  options.epsilon = 1e-4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        CrosApproximate(game, public_state, trunk, options));
  }
}
BENCHMARK(BM_CrosRefinementFig2c)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace efgval

BENCHMARK_MAIN();
