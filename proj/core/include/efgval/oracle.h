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

#ifndef EFGVAL_ORACLE_H_
#define EFGVAL_ORACLE_H_

#include <vector>

#include "efgval/game.h"
#include "efgval/strategy.h"

namespace efgval {

using Matrix = std::vector<std::vector<double>>;

// Pure strategies (one action index per declared infoset, mixed-radix order
// with the first infoset most significant) and the player-1 payoff matrix.
struct NormalForm {
  std::vector<std::vector<int>> pure[kNumPlayers];
  Matrix payoff;  // rows: player 1, columns: player 2
};

inline constexpr int kDefaultPureStrategyCap = 4096;

// Throws kCapExceeded when a player has more pure strategies than the cap.
NormalForm ToNormalForm(const Game& game, int cap = kDefaultPureStrategyCap);

struct MatrixSolution {
  std::vector<double> row;     // maximizer
  std::vector<double> column;  // minimizer
  double value = 0.0;
};

// Exact equilibrium of a zero-sum matrix game. Duplicate and weakly
// dominated pure strategies are removed first, then square kernels are
// enumerated by increasing size in lexicographic order; the first kernel
// whose solution is an equilibrium of the whole matrix (to 1e-9) wins.
MatrixSolution SolveMatrixGame(const Matrix& payoff);

// Row-player value of the game.
double GameValue(const Game& game, int cap = kDefaultPureStrategyCap);

// Behavioral strategy of the player induced by a mixture over its pure
// strategies (realization-weight normalization; uniform where unreached).
void MixtureToBehavioral(const Game& game, const NormalForm& normal_form,
                         int player, const std::vector<double>& mixture,
                         StrategyProfile& profile);

struct OracleEquilibrium {
  StrategyProfile profile;
  double value = 0.0;
};
OracleEquilibrium SolveByNormalForm(const Game& game,
                                    int cap = kDefaultPureStrategyCap);

}  // namespace efgval

#endif  // EFGVAL_ORACLE_H_
