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

#ifndef EFGVAL_CFR_H_
#define EFGVAL_CFR_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "efgval/game.h"
#include "efgval/strategy.h"

namespace efgval {

// Cumulative regrets and reach-weighted strategy sums per declared infoset
// and action. Regrets are stored undivided by the iteration count.
class RegretTable {
 public:
  RegretTable() = default;
  explicit RegretTable(const Game& game);

  std::span<double> regrets(int player, int infoset) {
    return regrets_[player - 1][infoset];
  }
  std::span<const double> regrets(int player, int infoset) const {
    return regrets_[player - 1][infoset];
  }
  std::span<double> strategy_sum(int player, int infoset) {
    return strategy_sum_[player - 1][infoset];
  }
  std::span<const double> strategy_sum(int player, int infoset) const {
    return strategy_sum_[player - 1][infoset];
  }
  int num_infosets(int player) const {
    return static_cast<int>(regrets_[player - 1].size());
  }
  int iterations() const { return iterations_; }
  void set_iterations(int t) { iterations_ = t; }

  // Regret-matching strategy of every infoset.
  StrategyProfile CurrentStrategy(const Game& game) const;

  bool operator==(const RegretTable&) const = default;

 private:
  std::vector<std::vector<double>> regrets_[kNumPlayers];
  std::vector<std::vector<double>> strategy_sum_[kNumPlayers];
  int iterations_ = 0;
};

// Distribution proportional to the positive parts; uniform if none is
// positive.
std::vector<double> RegretMatching(std::span<const double> regrets);

// One simultaneous-update sweep for both players.
void CfrIteration(const Game& game, RegretTable& table);

// Normalized strategy sums; uniform where the total weight is 0.
StrategyProfile AverageStrategy(const Game& game, const RegretTable& table);

struct CfrOptions {
  int iterations = 1000;
  // Stop as soon as a checked strategy reaches this exploitability.
  std::optional<double> stop_at_exploitability;
  // Also test the current regret-matching strategy at checkpoints; the first
  // strategy to meet the target is returned.
  bool check_current = false;
  // Checkpoint spacing: a value > 1 checks at geometric intervals; otherwise
  // checkpoints are 1, 2, 5, 10, 20, 50, ... plus the final iteration.
  double checkpoint_growth = 0.0;
};

struct CfrDiagnostics {
  std::vector<std::pair<int, double>> trace;  // (iteration, exploitability)
  int iterations_run = 0;
  double final_exploitability = 0.0;
  bool stopped_early = false;
  bool returned_current = false;
};

struct CfrResult {
  StrategyProfile strategy;
  CfrDiagnostics diagnostics;
  RegretTable table;
};

CfrResult SolveCfr(const Game& game, const CfrOptions& options);

// Next checkpoint strictly after t.
int NextCheckpoint(int t, double growth);

// Rows "<iteration>\t<exploitability>".
std::string WriteDiagnostics(const CfrDiagnostics& diagnostics);

}  // namespace efgval

#endif  // EFGVAL_CFR_H_
