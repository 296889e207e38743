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

#ifndef EFGVAL_GAME_FORMAT_H_
#define EFGVAL_GAME_FORMAT_H_

#include <string>
#include <string_view>

#include "efgval/game.h"

namespace efgval {

// Parses a game-format document:
//   {"name": ..., "players": 2, "root": node}
// where node is one of
//   {"type": "decision", "player": 1|2, "infoset": "...",
//    "actions": [{"action": "...", "child": node}, ...]}
//   {"type": "chance", "outcomes": [{"action": "...", "prob": p,
//    "child": node}, ...]}
//   {"type": "terminal", "utility": u}        // player-1 utility
// Throws EfgError with the line (syntax) or the JSON path (structure).
Game ParseGame(std::string_view text);

std::string SerializeGame(const Game& game);

Game LoadGameFile(const std::string& path);

}  // namespace efgval

#endif  // EFGVAL_GAME_FORMAT_H_
