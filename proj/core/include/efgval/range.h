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

#ifndef EFGVAL_RANGE_H_
#define EFGVAL_RANGE_H_

#include <string>
#include <string_view>
#include <vector>

#include "efgval/game.h"
#include "efgval/reach.h"
#include "efgval/strategy.h"

namespace efgval {

enum class RangeRepr {
  kInfosetReachP1,        // eta_1(I) for player-1 sets of S
  kHistoryReachP1,        // eta_1(h) for h in S
  kHistoryReachP1Chance,  // (eta_1(h), eta_c(h)) for h in S
  kCounterfactualP2,      // eta_{-2}(J) for player-2 sets of S
  kConditionalP2,         // eta(h|J) for h in J, J a player-2 set of S
  kSeparated,             // (eta_1(h), eta_2(h), eta_c(h)) for h in S
  kJoint,                 // eta(h) for h in S
  kCompact,               // eta_p(I) for the sets of both players in S
};

std::string_view RangeReprName(RangeRepr repr);
RangeRepr ParseRangeRepr(std::string_view name);

// A range at a public state. Entries are keyed by history path keys or
// augmented-set keys, in canonical order (node order, then set order).
struct RangeBundle {
  int state = 0;
  RangeRepr repr = RangeRepr::kJoint;
  std::vector<std::string> keys;
  std::vector<std::vector<double>> values;

  int size() const { return static_cast<int>(keys.size()); }
  // Single-component entry lookup; throws kUnknownKey.
  double at(std::string_view key, int component = 0) const;
};

// Augmented sets of `player` contained in public state `state`, ascending.
std::vector<int> StateSets(const Game& game, int player, int state);

RangeBundle RangeAt(const Game& game, const StrategyProfile& profile,
                    int state, RangeRepr repr);
RangeBundle RangeFromReach(const Game& game, const ReachTable& reach,
                           int state, RangeRepr repr);

// Conversions derivable from player-1 and chance information. The sources
// kInfosetReachP1, kHistoryReachP1 and kHistoryReachP1Chance generate every
// one of the first five representations; kSeparated additionally generates
// kJoint and kCompact. Any other direction is kUnsupported.
RangeBundle ConvertRange(const Game& game, const RangeBundle& bundle,
                         RangeRepr target);

// Joint range from explicit per-member masses (member order of the state).
RangeBundle JointRange(const Game& game, int state,
                       const std::vector<double>& masses);

// Largest absolute entry difference; throws when keys differ.
double RangeDistance(const RangeBundle& a, const RangeBundle& b);

std::string WriteRange(const Game& game, const RangeBundle& bundle);
RangeBundle ReadRange(const Game& game, std::string_view text);

}  // namespace efgval

#endif  // EFGVAL_RANGE_H_
