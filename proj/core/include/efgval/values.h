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

#ifndef EFGVAL_VALUES_H_
#define EFGVAL_VALUES_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "efgval/game.h"
#include "efgval/reach.h"
#include "efgval/strategy.h"

namespace efgval {

enum class ValueKind { kNormalized, kCounterfactual };
enum class ValueLevel { kHistory, kInfoset };

// Values keyed by history path keys or augmented-set keys.
struct ValueVector {
  int player = 1;
  ValueKind kind = ValueKind::kNormalized;
  ValueLevel level = ValueLevel::kInfoset;
  std::vector<std::string> keys;
  std::vector<double> values;

  int size() const { return static_cast<int>(keys.size()); }
  double at(std::string_view key) const;
};

// Largest absolute entry difference; throws kInvalidArgument on key mismatch.
double MaxAbsDifference(const ValueVector& a, const ValueVector& b);

// Rows "<key>\t<value>" preceded by a header row describing the vector.
std::string WriteValueVector(const ValueVector& vector);

// v_p(h) for every node.
std::vector<double> HistoryValues(const Game& game,
                                  const StrategyProfile& profile, int player);
double HistoryValue(const Game& game, const StrategyProfile& profile,
                    int player, NodeId h);
double ActionValue(const Game& game, const StrategyProfile& profile,
                   int player, NodeId h, int action);
double CfHistoryValue(const Game& game, const StrategyProfile& profile,
                      int player, NodeId h);
double CfActionValue(const Game& game, const StrategyProfile& profile,
                     int player, NodeId h, int action);
double ExpectedUtility(const Game& game, const StrategyProfile& profile,
                       int player);

// Values of every augmented set of the player, in set order. Normalized
// values of unreachable sets use the conditional distribution documented in
// CondDistribution.
std::vector<double> InfosetValues(const Game& game,
                                  const StrategyProfile& profile, int player,
                                  ValueKind kind);
// The same computation from precomputed history values and reach.
std::vector<double> InfosetValuesFrom(const Game& game, const ReachTable& reach,
                                      const std::vector<double>& history_values,
                                      int player, ValueKind kind);
double InfosetValue(const Game& game, const StrategyProfile& profile,
                    int player, int set);
double CfInfosetValue(const Game& game, const StrategyProfile& profile,
                      int player, int set);
// Q_{p,c}(I, a) for a decision set of the player.
double CfInfosetActionValue(const Game& game, const StrategyProfile& profile,
                            int player, int set, int action);

ValueVector InfosetValueVector(const Game& game,
                               const StrategyProfile& profile, int player,
                               ValueKind kind);
ValueVector InfosetValueVector(const Game& game,
                               const StrategyProfile& profile, int player,
                               ValueKind kind, const std::vector<int>& sets);
ValueVector HistoryValueVector(const Game& game,
                               const StrategyProfile& profile, int player,
                               ValueKind kind,
                               const std::vector<NodeId>& histories);

struct AxiomEntry {
  std::string check;
  std::string location;
  double residual = 0.0;
};

struct AxiomReport {
  double tolerance = 1e-9;
  std::vector<AxiomEntry> entries;

  bool passed() const;
  // Largest residual of a check id, or of all checks for an empty id.
  double MaxResidual(std::string_view check = {}) const;
  // Entries whose residual exceeds the tolerance.
  std::vector<AxiomEntry> Violations() const;
};

// Check ids: "definition", "terminal", "recursion", "slice", "root",
// "bounds". V must be an infoset-level vector over all augmented sets of the
// player in set order. Normalized recursion and slice checks are evaluated at
// sets with positive counterfactual reach.
AxiomReport CheckValueAxioms(const Game& game, const StrategyProfile& profile,
                             int player, const ValueVector& values,
                             double tolerance = 1e-9);

struct BestResponseResult {
  int player = 1;
  StrategyProfile strategy;  // the input profile with the player replaced
  double value = 0.0;        // u_p(br, sigma_{-p}), recomputed independently
  double sweep_value = 0.0;  // the same quantity from the dynamic program
  ValueVector cf_values;     // counterfactual values of every augmented set
};

// Overrides of the counterfactual weight at chosen histories; descendants
// inherit the override.
using WeightOverrides = std::vector<std::pair<NodeId, double>>;

// Pure strategy maximizing the counterfactual value of every augmented set
// of the player at once (a best response as well). Ties go to the lowest
// action index.
BestResponseResult CfBestResponse(const Game& game,
                                  const StrategyProfile& profile, int player,
                                  const WeightOverrides& overrides = {});
BestResponseResult BestResponse(const Game& game,
                                const StrategyProfile& profile, int player);

// Average over both players of the best-response values.
double Exploitability(const Game& game, const StrategyProfile& profile);

}  // namespace efgval

#endif  // EFGVAL_VALUES_H_
