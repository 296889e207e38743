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

#ifndef EFGVAL_RESOLVE_H_
#define EFGVAL_RESOLVE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "efgval/cfr.h"
#include "efgval/game.h"
#include "efgval/range.h"
#include "efgval/strategy.h"
#include "efgval/values.h"

namespace efgval {

// The top part of a game solved directly by CFR-D, and the public states
// whose subgames are delegated to a value oracle.
struct TrunkSpec {
  std::vector<char> in_trunk;      // per node
  std::vector<int> bottom_states;  // ascending public-state index

  // Trunk: public states at public-tree depth < depth, plus terminal states
  // at that depth. Bottom states: the non-terminal states at that depth.
  static TrunkSpec FromDepth(const Game& game, int depth);
  // Trunk: every history outside the subgame of the state; bottom: the state.
  static TrunkSpec AboveState(const Game& game, int state);

  bool IsBottom(int state) const;
};

// G(S, r): a chance root choosing a member of S in proportion to the joint
// range (uniformly when the range has zero mass) above copies of the
// members' subtrees with the original information-set labels.
struct GadgetGame {
  Game game;
  int state = 0;
  std::vector<NodeId> to_original;  // gadget node -> original (root: kNoNode)
  std::vector<NodeId> from_original_member;  // gadget node of each member
  // Original node -> gadget node, for nodes of the subgame (else kNoNode).
  std::vector<NodeId> to_gadget;
  // Gadget infoset index -> original infoset index, per player.
  std::vector<int> infoset_map[kNumPlayers];
};

// Accepts a joint or separated range at the state.
GadgetGame MakeGadget(const Game& game, const RangeBundle& range);

// Copies original-game distributions of infosets inside the gadget into a
// gadget profile, and back.
StrategyProfile RestrictToGadget(const Game& game, const GadgetGame& gadget,
                                 const StrategyProfile& profile);
void ApplyGadgetStrategy(const Game& game, const GadgetGame& gadget,
                         const StrategyProfile& gadget_profile,
                         StrategyProfile& profile);

// Exploitability inside G(S, r) of the part of the profile below S.
double GadgetExploitability(const Game& game, const RangeBundle& range,
                            const StrategyProfile& profile);

struct ResolveOptions {
  double epsilon = 1e-4;
  int iteration_cap = 10000000;
  // Noise levels of the compatible-root-optimal approximation. Empty: 10,
  // 100, ... up to the first n with 1/n <= epsilon.
  std::vector<double> schedule;
};

std::vector<double> NoiseSchedule(const ResolveOptions& options);

// Solves a gadget with CFR until the average or the current strategy has
// exploitability <= target (checked at geometric intervals) or the cap.
CfrResult SolveGadget(const GadgetGame& gadget, double target, int cap);

// Per-player counterfactual values of the augmented sets of a public state.
struct SubgameSolution {
  int state = 0;
  ValueVector nu[kNumPlayers];  // sets of StateSets(game, p, state)
  StrategyProfile strategy;     // trunk profile above S, resolved below
  double gadget_exploitability = 0.0;  // of strategy in G(S, r)
  int iterations = 0;
  bool used_noise = false;
};

// Counterfactual values of every player's sets in S under the profile,
// with the counterfactual best response of that player (original weights).
ValueVector CbrValuesAtState(const Game& game, const StrategyProfile& profile,
                             int player, int state);

// Resolves S at a separated range. When every member has positive mass the
// gadget is solved directly; otherwise the compatible trunk profile (or one
// synthesized from the range) is smoothed by the noise schedule so that
// histories of zero mass receive rational play. Values are counterfactual
// best-response values against the resolved opponent, measured with the
// original game's counterfactual weights.
SubgameSolution ExactSubgameSolve(const Game& game, const RangeBundle& range,
                                  const StrategyProfile* trunk,
                                  const ResolveOptions& options);

// Oracle interface used by CFR-D: (state, separated range, current trunk
// profile) -> values. The trunk profile may be ignored.
struct OracleQuery {
  int state = 0;
  const RangeBundle* range = nullptr;
  const StrategyProfile* trunk = nullptr;
};
using SubgameValueOracle =
    std::function<SubgameSolution(const Game&, const OracleQuery&)>;

SubgameValueOracle MakeExactOracle(const ResolveOptions& options);
// Returns the given values regardless of the range.
SubgameValueOracle MakeConstantOracle(std::map<int, SubgameSolution> values);

struct CfrdOptions {
  int iterations = 1000;
  // Reuse oracle answers for identical queries across iterations.
  bool memoize = true;
  double checkpoint_growth = 0.0;  // as in CfrOptions
  // False: only the final iteration's estimate is recorded.
  bool record_trace = true;
};

struct CfrdResult {
  StrategyProfile trunk_strategy;  // average; uniform outside the trunk
  CfrDiagnostics diagnostics;      // trace of the trunk exploitability estimate
  int oracle_calls = 0;
  int cache_hits = 0;
};

CfrdResult CfrdSolve(const Game& game, const TrunkSpec& trunk,
                     const SubgameValueOracle& oracle,
                     const CfrdOptions& options);

// Trunk profile completed by resolving every bottom state at its range.
StrategyProfile CompleteTrunkProfile(const Game& game, const TrunkSpec& trunk,
                                     const StrategyProfile& trunk_strategy,
                                     const ResolveOptions& options);

// Compatible root-optimal strategy approximation and the values it induces.
struct CrosResult {
  int state = 0;
  StrategyProfile strategy;
  // Over every augmented set (resp. history) of the subgame of S.
  ValueVector infoset_values[kNumPlayers];
  ValueVector infoset_cf_values[kNumPlayers];
  ValueVector history_values[kNumPlayers];
  ValueVector history_cf_values[kNumPlayers];
  double gadget_exploitability = 0.0;
  double cbr_gap = 0.0;             // counterfactual, all sets of G(S)
  double normalized_cbr_gap = 0.0;  // where the counterfactual reach is > 0
  double range_error = 0.0;
  // (n, stage exploitability); n = 0 marks a single unsmoothed solve.
  std::vector<std::pair<double, double>> stages;
};

CrosResult CrosApproximate(const Game& game, int state,
                           const StrategyProfile& trunk,
                           const ResolveOptions& options);
CrosResult CrosApproximate(const Game& game, const RangeBundle& range,
                           const ResolveOptions& options);
// Values and residuals of an explicit profile, as a CROS candidate at S.
CrosResult EvaluateCandidate(const Game& game, int state,
                             const StrategyProfile& profile);

// A profile above S that reproduces the joint range: at every infoset,
// probabilities proportional to the range mass below each action. Throws
// kInfeasibleRange when the result misses the target by more than 1e-9.
StrategyProfile SynthesizeTrunk(const Game& game, const RangeBundle& range);

// Optimal value function at S for the trunk strategy (both players).
struct OptimalValues {
  ValueVector values[kNumPlayers];
  CrosResult cros;
};
OptimalValues OptimalValueFunction(const Game& game,
                                   const StrategyProfile& trunk, int state,
                                   ValueLevel level, ValueKind kind,
                                   const ResolveOptions& options);

ValueVector ConvexCombine(const ValueVector& a, const ValueVector& b,
                          double lambda);
SubgameSolution ConvexCombine(const SubgameSolution& a,
                              const SubgameSolution& b, double lambda);

struct VerifyOptions {
  // Reference profile; when absent the CROS approximation at (S, r) is used.
  const StrategyProfile* sigma = nullptr;
  // Compatible trunk for the CROS reference; synthesized when absent.
  const StrategyProfile* trunk = nullptr;
  bool constructive = false;
  CfrdOptions cfrd;
  ResolveOptions resolve;
};

struct VerificationReport {
  double range_gap = 0.0;
  double gadget_exploitability = 0.0;
  double cbr_gap = 0.0;
  std::string worst_set;
  double residual = 0.0;  // max of the three above
  std::optional<double> constructive_exploitability;
};

VerificationReport VerifyValueVector(const Game& game, const RangeBundle& range,
                                     const ValueVector values[kNumPlayers],
                                     const VerifyOptions& options);

// Dataset rows for value-function fitting: random trunk strategies (unit
// Dirichlet per infoset), the compact range at the state and the resolved
// counterfactual values.
std::string DumpDataset(const Game& game, int state, int samples,
                        std::uint64_t seed, const ResolveOptions& options);

}  // namespace efgval

#endif  // EFGVAL_RESOLVE_H_
