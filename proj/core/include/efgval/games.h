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

#ifndef EFGVAL_GAMES_H_
#define EFGVAL_GAMES_H_

#include <string>
#include <string_view>
#include <vector>

#include "efgval/game.h"

namespace efgval {

struct GameParams {
  // thm3_chain: number of matching-pennies blocks before the final block.
  int n = 2;
  // thm3_chain: chance weights of h_0..h_n (normalized by the constructor);
  // empty selects the default (0.3, 0.4, 0.3) for n = 2 and uniform
  // weights otherwise.
  std::vector<double> range;
};

// Canonical catalog names, in a fixed order.
const std::vector<std::string>& CatalogNames();
// Additional small games used by tests: a one-player perfect-information
// game with chance and a two-player perfect-information game.
const std::vector<std::string>& ExtraGameNames();

// Builds a catalog or extra game; accepts the aliases kuhn, fig2b and fig2c.
// Throws kUnknownKey for unknown names and kInvalidArgument for bad params.
Game BuildGame(std::string_view name, const GameParams& params = {});

Game MatchingPennies();
Game KuhnPoker();
Game Fig1Tradeoff();
Game Fig2aInfosetValues();
Game Fig2bPrepare();
Game Fig2cLR();
Game Fig4LeftOnePlayer();
Game Thm3Chain(int n, const std::vector<double>& range);
Game MdpOnePlayer();
Game PerfectInfoDuel();

// Player owning the infoset link between blocks i and i+1 of thm3_chain(n).
int Thm3LinkPlayer(int n, int i);

}  // namespace efgval

#endif  // EFGVAL_GAMES_H_
