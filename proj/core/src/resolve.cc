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

#include "efgval/resolve.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <sstream>
#include <tuple>

#include "efgval/reach.h"
#include "efgval/text_io.h"

namespace efgval {
namespace {

constexpr double kRangeTolerance = 1e-9;
constexpr double kCheckpointGrowth = 1.25;

const PublicState& StateOf(const Game& game, int state) {
  if (state < 0 || state >= game.public_tree().size()) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "public state index " + std::to_string(state) +
                       " out of range");
  }
  return game.public_tree().states[state];
}

// Joint mass of every member of the range's state, in member order.
std::vector<double> JointMasses(const Game& game, const RangeBundle& range) {
  const PublicState& state = StateOf(game, range.state);
  if (range.repr != RangeRepr::kJoint && range.repr != RangeRepr::kSeparated) {
    throw EfgError(ErrorCode::kUnsupported,
                   "expected a joint or separated range, got " +
                       std::string(RangeReprName(range.repr)));
  }
  if (range.size() != static_cast<int>(state.members.size())) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "range does not match public state " + state.id);
  }
  std::vector<double> masses;
  for (const auto& entry : range.values) {
    double m = 1.0;
    for (double x : entry) m *= x;
    masses.push_back(m);
  }
  return masses;
}

// Marks the histories of the subgame rooted at the state.
std::vector<char> SubgameMask(const Game& game, int state) {
  std::vector<char> mask(game.num_nodes(), 0);
  for (NodeId h : StateOf(game, state).members) {
    for (NodeId v = h; v < game.node(h).subtree_end; ++v) mask[v] = 1;
  }
  return mask;
}

// Augmented sets of the player whose histories lie in the subgame.
std::vector<int> SubgameSets(const Game& game, int player,
                             const std::vector<char>& mask) {
  const InfoPartition& part = game.augmented(player);
  std::vector<int> sets;
  for (int s = 0; s < part.size(); ++s) {
    if (mask[part.sets[s].front()]) sets.push_back(s);
  }
  return sets;
}

// Copies every infoset distribution of the subgame from src into dst.
void CopySubgameInfosets(const Game& game, const std::vector<char>& mask,
                         const StrategyProfile& src, StrategyProfile& dst) {
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < static_cast<int>(game.infosets(p).size()); ++i) {
      if (!mask[game.infoset(p, i).members.front()]) continue;
      auto from = src.at(p, i);
      std::copy(from.begin(), from.end(), dst.mutable_at(p, i).begin());
    }
  }
}

// Smallest positive normalized member mass (1 when all masses are zero).
double MinPositiveShare(const std::vector<double>& masses) {
  double total = 0.0;
  for (double m : masses) total += m;
  if (!(total > 0.0)) return 1.0;
  double lowest = 1.0;
  for (double m : masses) {
    if (m > 0.0) lowest = std::min(lowest, m / total);
  }
  return lowest;
}

ValueVector SelectSets(const ValueVector& all, int player,
                       const std::vector<int>& sets) {
  ValueVector out;
  out.player = player;
  out.kind = all.kind;
  out.level = all.level;
  for (int s : sets) {
    out.keys.push_back(all.keys[s]);
    out.values.push_back(all.values[s]);
  }
  return out;
}

// Counterfactual best-response values of the state's sets, measured with
// the separated range's counterfactual weights at the members.
ValueVector CbrValuesWithWeights(const Game& game, const StrategyProfile& profile,
                                 int player, const RangeBundle& separated) {
  const PublicState& state = StateOf(game, separated.state);
  WeightOverrides overrides;
  for (size_t k = 0; k < state.members.size(); ++k) {
    const auto& e = separated.values[k];
    overrides.emplace_back(state.members[k], e[2 - player] * e[2]);
  }
  BestResponseResult br = CfBestResponse(game, profile, player, overrides);
  return SelectSets(br.cf_values, player,
                    StateSets(game, player, separated.state));
}

}  // namespace

// ---------------------------------------------------------------------------
// Trunks.

TrunkSpec TrunkSpec::FromDepth(const Game& game, int depth) {
  if (depth < 0) {
    throw EfgError(ErrorCode::kInvalidArgument, "trunk depth must be >= 0");
  }
  TrunkSpec trunk;
  trunk.in_trunk.assign(game.num_nodes(), 0);
  const PublicTree& tree = game.public_tree();
  for (int s = 0; s < tree.size(); ++s) {
    const PublicState& state = tree.states[s];
    if (state.depth < depth || (state.depth == depth && state.terminal)) {
      for (NodeId h : state.members) trunk.in_trunk[h] = 1;
    } else if (state.depth == depth) {
      trunk.bottom_states.push_back(s);
    }
  }
  return trunk;
}

TrunkSpec TrunkSpec::AboveState(const Game& game, int state) {
  TrunkSpec trunk;
  const std::vector<char> mask = SubgameMask(game, state);
  trunk.in_trunk.resize(game.num_nodes());
  for (NodeId h = 0; h < game.num_nodes(); ++h) trunk.in_trunk[h] = !mask[h];
  trunk.bottom_states.push_back(state);
  return trunk;
}

bool TrunkSpec::IsBottom(int state) const {
  return std::binary_search(bottom_states.begin(), bottom_states.end(), state);
}

// ---------------------------------------------------------------------------
// Gadgets.

GadgetGame MakeGadget(const Game& game, const RangeBundle& range) {
  const PublicState& state = StateOf(game, range.state);
  if (state.terminal) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "cannot resolve terminal public state " + state.id);
  }
  std::vector<double> masses = JointMasses(game, range);
  double total = 0.0;
  for (double m : masses) total += m;
  const size_t k = masses.size();
  std::vector<double> probs(k);
  for (size_t i = 0; i < k; ++i) {
    probs[i] = total > 0.0 ? masses[i] / total : 1.0 / static_cast<double>(k);
  }
  std::vector<std::tuple<std::string, double, NodeSpec>> outcomes;
  for (size_t i = 0; i < k; ++i) {
    outcomes.emplace_back("s" + std::to_string(i), probs[i],
                          game.ToSpec(state.members[i]));
  }
  GadgetGame gadget{Game::FromSpec(game.name() + "@" + state.id,
                                   NodeSpec::Chance(std::move(outcomes))),
                    range.state,
                    {},
                    {},
                    {},
                    {}};
  const int n = gadget.game.num_nodes();
  gadget.to_original.assign(n, kNoNode);
  gadget.to_gadget.assign(game.num_nodes(), kNoNode);
  for (size_t i = 0; i < k; ++i) {
    const NodeId base = gadget.game.node(0).children[i];
    const NodeId member = state.members[i];
    gadget.from_original_member.push_back(base);
    for (NodeId v = member; v < game.node(member).subtree_end; ++v) {
      gadget.to_original[base + (v - member)] = v;
      gadget.to_gadget[v] = base + (v - member);
    }
  }
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (const Infoset& infoset : gadget.game.infosets(p)) {
      const int original = game.FindInfoset(p, infoset.label);
      if (original < 0) {
        throw EfgError(ErrorCode::kStructure,
                       "gadget infoset " + infoset.label + " has no original");
      }
      gadget.infoset_map[p - 1].push_back(original);
    }
  }
  return gadget;
}

StrategyProfile RestrictToGadget(const Game& game, const GadgetGame& gadget,
                                 const StrategyProfile& profile) {
  (void)game;
  StrategyProfile out = StrategyProfile::Uniform(gadget.game);
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < out.num_infosets(p); ++i) {
      auto from = profile.at(p, gadget.infoset_map[p - 1][i]);
      std::copy(from.begin(), from.end(), out.mutable_at(p, i).begin());
    }
  }
  return out;
}

void ApplyGadgetStrategy(const Game& game, const GadgetGame& gadget,
                         const StrategyProfile& gadget_profile,
                         StrategyProfile& profile) {
  (void)game;
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < gadget_profile.num_infosets(p); ++i) {
      auto from = gadget_profile.at(p, i);
      std::copy(from.begin(), from.end(),
                profile.mutable_at(p, gadget.infoset_map[p - 1][i]).begin());
    }
  }
}

double GadgetExploitability(const Game& game, const RangeBundle& range,
                            const StrategyProfile& profile) {
  const GadgetGame gadget = MakeGadget(game, range);
  return Exploitability(gadget.game, RestrictToGadget(game, gadget, profile));
}

std::vector<double> NoiseSchedule(const ResolveOptions& options) {
  if (!options.schedule.empty()) return options.schedule;
  if (!(options.epsilon > 0.0)) {
    throw EfgError(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  std::vector<double> schedule;
  double n = 10.0;
  while (true) {
    schedule.push_back(n);
    if (1.0 / n <= options.epsilon * (1.0 + 1e-12)) break;
    n *= 10.0;
  }
  return schedule;
}

CfrResult SolveGadget(const GadgetGame& gadget, double target, int cap) {
  CfrOptions options;
  options.iterations = cap;
  options.stop_at_exploitability = target;
  options.check_current = true;
  options.checkpoint_growth = kCheckpointGrowth;
  return SolveCfr(gadget.game, options);
}

ValueVector CbrValuesAtState(const Game& game, const StrategyProfile& profile,
                             int player, int state) {
  BestResponseResult br = CfBestResponse(game, profile, player);
  return SelectSets(br.cf_values, player, StateSets(game, player, state));
}

// ---------------------------------------------------------------------------
// Compatible root-optimal approximation.

CrosResult EvaluateCandidate(const Game& game, int state,
                             const StrategyProfile& profile) {
  const std::vector<char> mask = SubgameMask(game, state);
  CrosResult out;
  out.state = state;
  out.strategy = profile;
  std::vector<NodeId> histories;
  for (NodeId h = 0; h < game.num_nodes(); ++h) {
    if (mask[h]) histories.push_back(h);
  }
  const ReachTable reach(game, profile);
  double gap = 0.0;
  double normalized_gap = 0.0;
  for (int p = 1; p <= kNumPlayers; ++p) {
    const std::vector<int> sets = SubgameSets(game, p, mask);
    out.infoset_values[p - 1] =
        InfosetValueVector(game, profile, p, ValueKind::kNormalized, sets);
    out.infoset_cf_values[p - 1] =
        InfosetValueVector(game, profile, p, ValueKind::kCounterfactual, sets);
    out.history_values[p - 1] = HistoryValueVector(
        game, profile, p, ValueKind::kNormalized, histories);
    out.history_cf_values[p - 1] = HistoryValueVector(
        game, profile, p, ValueKind::kCounterfactual, histories);
    const BestResponseResult br = CfBestResponse(game, profile, p);
    for (size_t k = 0; k < sets.size(); ++k) {
      const double diff = br.cf_values.values[sets[k]] -
                          out.infoset_cf_values[p - 1].values[k];
      gap = std::max(gap, std::abs(diff));
      const double weight =
          ComputeInfosetReach(game, reach, p, sets[k]).counterfactual;
      if (weight > 0.0) {
        normalized_gap = std::max(normalized_gap, std::abs(diff) / weight);
      }
    }
  }
  out.cbr_gap = gap;
  out.normalized_cbr_gap = normalized_gap;
  out.gadget_exploitability = GadgetExploitability(
      game, RangeFromReach(game, reach, state, RangeRepr::kJoint), profile);
  return out;
}

CrosResult CrosApproximate(const Game& game, int state,
                           const StrategyProfile& trunk,
                           const ResolveOptions& options) {
  StrategyProfile strategy = trunk;
  std::vector<std::pair<double, double>> stages;
  const std::vector<double> masses =
      JointMasses(game, RangeAt(game, trunk, state, RangeRepr::kJoint));
  if (std::all_of(masses.begin(), masses.end(),
                  [](double m) { return m > 0.0; })) {
    // A fully mixed range needs no smoothing: any gadget equilibrium
    // extends to a compatible root-optimal profile.
    const GadgetGame gadget =
        MakeGadget(game, RangeAt(game, trunk, state, RangeRepr::kJoint));
    const CfrResult solved =
        SolveGadget(gadget, options.epsilon, options.iteration_cap);
    stages.emplace_back(0.0, solved.diagnostics.final_exploitability);
    ApplyGadgetStrategy(game, gadget, solved.strategy, strategy);
    CrosResult out = EvaluateCandidate(game, state, strategy);
    out.stages = std::move(stages);
    return out;
  }
  for (double n : NoiseSchedule(options)) {
    const StrategyProfile noisy = NoisyProfile(game, trunk, n);
    const RangeBundle range = RangeAt(game, noisy, state, RangeRepr::kJoint);
    const GadgetGame gadget = MakeGadget(game, range);
    // Zero-mass histories of the original range carry only the noise mass,
    // so the tolerance scales with the smallest member share.
    const double target = MinPositiveShare(JointMasses(game, range)) / n;
    const CfrResult solved =
        SolveGadget(gadget, target, options.iteration_cap);
    stages.emplace_back(n, solved.diagnostics.final_exploitability);
    ApplyGadgetStrategy(game, gadget, solved.strategy, strategy);
  }
  CrosResult out = EvaluateCandidate(game, state, strategy);
  out.stages = std::move(stages);
  out.range_error =
      RangeDistance(RangeAt(game, strategy, state, RangeRepr::kSeparated),
                    RangeAt(game, trunk, state, RangeRepr::kSeparated));
  return out;
}

StrategyProfile SynthesizeTrunk(const Game& game, const RangeBundle& range) {
  const PublicState& state = StateOf(game, range.state);
  const std::vector<double> target = JointMasses(game, range);
  const std::vector<char> mask = SubgameMask(game, range.state);
  std::vector<double> mass(game.num_nodes(), 0.0);
  for (size_t k = 0; k < state.members.size(); ++k) {
    for (NodeId v = state.members[k]; v != kNoNode; v = game.node(v).parent) {
      mass[v] += target[k];
    }
  }
  StrategyProfile profile = StrategyProfile::Uniform(game);
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < static_cast<int>(game.infosets(p).size()); ++i) {
      const Infoset& infoset = game.infoset(p, i);
      if (mask[infoset.members.front()]) continue;
      std::vector<double> weight(infoset.num_actions(), 0.0);
      double total = 0.0;
      for (NodeId h : infoset.members) {
        for (int a = 0; a < infoset.num_actions(); ++a) {
          weight[a] += mass[game.node(h).children[a]];
          total += mass[game.node(h).children[a]];
        }
      }
      if (!(total > 0.0)) continue;
      auto dist = profile.mutable_at(p, i);
      for (int a = 0; a < infoset.num_actions(); ++a) {
        dist[a] = weight[a] / total;
      }
    }
  }
  const RangeBundle achieved = RangeAt(game, profile, range.state,
                                       RangeRepr::kJoint);
  double worst = 0.0;
  for (size_t k = 0; k < target.size(); ++k) {
    worst = std::max(worst, std::abs(achieved.values[k][0] - target[k]));
  }
  if (worst > kRangeTolerance) {
    throw EfgError(ErrorCode::kInfeasibleRange,
                   "no trunk strategy reproduces the range at " + state.id +
                       " (closest miss " + FormatDouble(worst) + ")");
  }
  return profile;
}

CrosResult CrosApproximate(const Game& game, const RangeBundle& range,
                           const ResolveOptions& options) {
  return CrosApproximate(game, range.state, SynthesizeTrunk(game, range),
                         options);
}

// ---------------------------------------------------------------------------
// Exact resolving.

SubgameSolution ExactSubgameSolve(const Game& game, const RangeBundle& range,
                                  const StrategyProfile* trunk,
                                  const ResolveOptions& options) {
  StrategyProfile base;
  if (trunk != nullptr) {
    base = *trunk;
  } else if (range.repr == RangeRepr::kSeparated) {
    base = StrategyProfile::Uniform(game);
  } else {
    base = SynthesizeTrunk(game, range);
  }
  RangeBundle separated = range;
  if (range.repr != RangeRepr::kSeparated) {
    separated = RangeAt(game, base, range.state, RangeRepr::kSeparated);
    if (range.repr == RangeRepr::kJoint) {
      const RangeBundle joint =
          RangeAt(game, base, range.state, RangeRepr::kJoint);
      if (RangeDistance(joint, range) > kRangeTolerance) {
        throw EfgError(ErrorCode::kInfeasibleRange,
                       "trunk strategy does not reproduce the range");
      }
    }
  }
  const std::vector<double> masses = JointMasses(game, separated);
  const bool all_positive = std::all_of(masses.begin(), masses.end(),
                                        [](double m) { return m > 0.0; });
  SubgameSolution out;
  out.state = range.state;
  if (all_positive) {
    const GadgetGame gadget = MakeGadget(game, separated);
    const CfrResult solved =
        SolveGadget(gadget, options.epsilon, options.iteration_cap);
    out.strategy = std::move(base);
    ApplyGadgetStrategy(game, gadget, solved.strategy, out.strategy);
    out.gadget_exploitability = solved.diagnostics.final_exploitability;
    out.iterations = solved.diagnostics.iterations_run;
  } else {
    if (trunk == nullptr && range.repr == RangeRepr::kSeparated) {
      base = SynthesizeTrunk(game, separated);
    }
    CrosResult cros = CrosApproximate(game, range.state, base, options);
    out.strategy = std::move(cros.strategy);
    out.gadget_exploitability = GadgetExploitability(game, separated,
                                                     out.strategy);
    out.used_noise = true;
  }
  for (int p = 1; p <= kNumPlayers; ++p) {
    out.nu[p - 1] = CbrValuesWithWeights(game, out.strategy, p, separated);
  }
  return out;
}

SubgameValueOracle MakeExactOracle(const ResolveOptions& options) {
  return [options](const Game& game, const OracleQuery& query) {
    return ExactSubgameSolve(game, *query.range, query.trunk, options);
  };
}

SubgameValueOracle MakeConstantOracle(std::map<int, SubgameSolution> values) {
  return [values = std::move(values)](const Game& game,
                                      const OracleQuery& query) {
    auto it = values.find(query.state);
    if (it == values.end()) {
      throw EfgError(ErrorCode::kUnknownKey,
                     "no constant values for public state " +
                         game.public_tree().states.at(query.state).id);
    }
    return it->second;
  };
}

// ---------------------------------------------------------------------------
// CFR-D.

namespace {

struct TrunkContext {
  const Game& game;
  const TrunkSpec& trunk;
  std::vector<int> bottom_index;  // public state -> bottom position or -1
};

// Per-set counterfactual values of the player over the trunk, with oracle
// values at bottom sets. When best_response is set the player maximizes at
// its decisions; otherwise it follows the profile and regrets are reported.
std::vector<double> TrunkSweep(
    const TrunkContext& ctx, const StrategyProfile& profile,
    const ReachTable& reach, int player,
    const std::vector<const SubgameSolution*>& solutions, bool best_response,
    RegretTable* regret_out, double* root_value) {
  const Game& game = ctx.game;
  const InfoPartition& part = game.augmented(player);
  const PublicTree& tree = game.public_tree();
  std::vector<double> value(part.size(), 0.0);
  for (int s = part.size() - 1; s >= 0; --s) {
    const NodeId first = part.sets[s].front();
    const int state = tree.state_of[first];
    const int b = ctx.bottom_index[state];
    if (b >= 0) {
      value[s] = solutions[b]->nu[player - 1].at(part.keys[s]);
      continue;
    }
    if (!ctx.trunk.in_trunk[first]) continue;
    if (part.children[s].empty()) {
      double v = 0.0;
      for (NodeId z : part.sets[s]) {
        if (game.node(z).is_terminal()) {
          v += reach.Counterfactual(player, z) * game.Utility(z, player);
        }
      }
      value[s] = v;
      continue;
    }
    if (!part.is_decision(s)) {
      double v = 0.0;
      for (int c : part.children[s]) v += value[c];
      value[s] = v;
      continue;
    }
    const int infoset = part.declared[s];
    std::vector<double> q(game.infoset(player, infoset).num_actions(), 0.0);
    for (int c : part.children[s]) q[part.parent_action[c]] += value[c];
    const auto dist = profile.at(player, infoset);
    if (best_response) {
      value[s] = *std::max_element(q.begin(), q.end());
    } else {
      double v = 0.0;
      for (size_t a = 0; a < q.size(); ++a) v += dist[a] * q[a];
      value[s] = v;
      if (regret_out != nullptr) {
        auto regrets = regret_out->regrets(player, infoset);
        auto sums = regret_out->strategy_sum(player, infoset);
        const double own = reach.player(player, first);
        for (size_t a = 0; a < q.size(); ++a) {
          regrets[a] += q[a] - v;
          sums[a] += own * dist[a];
        }
      }
    }
  }
  if (root_value != nullptr) *root_value = value[part.set_of[game.root()]];
  return value;
}

std::vector<double> MemoKey(const Game& game, const RangeBundle& range,
                            const StrategyProfile& profile,
                            const TrunkSpec& trunk) {
  std::vector<double> key;
  bool zero = false;
  for (const auto& entry : range.values) {
    double m = 1.0;
    for (double x : entry) {
      key.push_back(x);
      m *= x;
    }
    zero = zero || !(m > 0.0);
  }
  if (zero) {
    // Smoothed resolving depends on the trunk profile, not only the range.
    key.push_back(-1.0);
    for (int p = 1; p <= kNumPlayers; ++p) {
      for (int i = 0; i < static_cast<int>(game.infosets(p).size()); ++i) {
        if (!trunk.in_trunk[game.infoset(p, i).members.front()]) continue;
        for (double x : profile.at(p, i)) key.push_back(x);
      }
    }
  }
  return key;
}

}  // namespace

CfrdResult CfrdSolve(const Game& game, const TrunkSpec& trunk,
                     const SubgameValueOracle& oracle,
                     const CfrdOptions& options) {
  if (options.iterations < 1) {
    throw EfgError(ErrorCode::kInvalidArgument, "iterations must be >= 1");
  }
  if (static_cast<int>(trunk.in_trunk.size()) != game.num_nodes()) {
    throw EfgError(ErrorCode::kInvalidArgument, "trunk does not fit the game");
  }
  TrunkContext ctx{game, trunk, std::vector<int>(game.public_tree().size(), -1)};
  for (size_t b = 0; b < trunk.bottom_states.size(); ++b) {
    ctx.bottom_index[trunk.bottom_states[b]] = static_cast<int>(b);
  }
  CfrdResult result;
  std::map<std::pair<int, std::vector<double>>, SubgameSolution> memo;
  // Without memoization the solutions live only for one sweep.
  std::deque<SubgameSolution> scratch;
  auto solve_bottoms = [&](const StrategyProfile& profile,
                           const ReachTable& reach) {
    std::vector<const SubgameSolution*> out;
    scratch.clear();
    for (int state : trunk.bottom_states) {
      const RangeBundle range =
          RangeFromReach(game, reach, state, RangeRepr::kSeparated);
      OracleQuery query{state, &range, &profile};
      if (!options.memoize) {
        ++result.oracle_calls;
        scratch.push_back(oracle(game, query));
        out.push_back(&scratch.back());
        continue;
      }
      auto key = std::make_pair(state, MemoKey(game, range, profile, trunk));
      auto it = memo.find(key);
      if (it != memo.end()) {
        ++result.cache_hits;
      } else {
        ++result.oracle_calls;
        it = memo.emplace(std::move(key), oracle(game, query)).first;
      }
      out.push_back(&it->second);
    }
    return out;
  };

  RegretTable table(game);
  int next_check = 1;
  for (int t = 1; t <= options.iterations; ++t) {
    const StrategyProfile sigma = table.CurrentStrategy(game);
    const ReachTable reach(game, sigma);
    const auto solutions = solve_bottoms(sigma, reach);
    // Both players' regrets are computed from the same profile.
    for (int p = 1; p <= kNumPlayers; ++p) {
      TrunkSweep(ctx, sigma, reach, p, solutions, false, &table, nullptr);
    }
    table.set_iterations(t);
    if (t == next_check || t == options.iterations) {
      next_check = NextCheckpoint(t, options.checkpoint_growth);
      if (!options.record_trace && t != options.iterations) continue;
      const StrategyProfile average = AverageStrategy(game, table);
      const ReachTable avg_reach(game, average);
      const auto avg_solutions = solve_bottoms(average, avg_reach);
      double estimate = 0.0;
      for (int p = 1; p <= kNumPlayers; ++p) {
        double root = 0.0;
        TrunkSweep(ctx, average, avg_reach, p, avg_solutions, true, nullptr,
                   &root);
        estimate += 0.5 * root;
      }
      result.diagnostics.trace.emplace_back(t, estimate);
      result.diagnostics.final_exploitability = estimate;
    }
  }
  result.diagnostics.iterations_run = options.iterations;
  result.trunk_strategy = AverageStrategy(game, table);
  // Infosets outside the trunk are left uniform.
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < static_cast<int>(game.infosets(p).size()); ++i) {
      if (trunk.in_trunk[game.infoset(p, i).members.front()]) continue;
      auto dist = result.trunk_strategy.mutable_at(p, i);
      std::fill(dist.begin(), dist.end(), 1.0 / dist.size());
    }
  }
  return result;
}

StrategyProfile CompleteTrunkProfile(const Game& game, const TrunkSpec& trunk,
                                     const StrategyProfile& trunk_strategy,
                                     const ResolveOptions& options) {
  StrategyProfile profile = trunk_strategy;
  for (int state : trunk.bottom_states) {
    const RangeBundle range =
        RangeAt(game, trunk_strategy, state, RangeRepr::kSeparated);
    const SubgameSolution solution =
        ExactSubgameSolve(game, range, &trunk_strategy, options);
    CopySubgameInfosets(game, SubgameMask(game, state), solution.strategy,
                        profile);
  }
  return profile;
}

// ---------------------------------------------------------------------------
// Value functions.

OptimalValues OptimalValueFunction(const Game& game,
                                   const StrategyProfile& trunk, int state,
                                   ValueLevel level, ValueKind kind,
                                   const ResolveOptions& options) {
  OptimalValues out;
  out.cros = CrosApproximate(game, state, trunk, options);
  for (int p = 0; p < kNumPlayers; ++p) {
    if (level == ValueLevel::kInfoset) {
      out.values[p] = kind == ValueKind::kNormalized
                          ? out.cros.infoset_values[p]
                          : out.cros.infoset_cf_values[p];
    } else {
      out.values[p] = kind == ValueKind::kNormalized
                          ? out.cros.history_values[p]
                          : out.cros.history_cf_values[p];
    }
  }
  return out;
}

ValueVector ConvexCombine(const ValueVector& a, const ValueVector& b,
                          double lambda) {
  if (a.keys != b.keys || a.player != b.player || a.kind != b.kind ||
      a.level != b.level) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "value vectors are not over the same entries");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw EfgError(ErrorCode::kInvalidArgument, "lambda must lie in [0, 1]");
  }
  ValueVector out = a;
  for (size_t k = 0; k < out.values.size(); ++k) {
    out.values[k] = lambda * a.values[k] + (1.0 - lambda) * b.values[k];
  }
  return out;
}

SubgameSolution ConvexCombine(const SubgameSolution& a,
                              const SubgameSolution& b, double lambda) {
  if (a.state != b.state) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "solutions belong to different public states");
  }
  SubgameSolution out = a;
  for (int p = 0; p < kNumPlayers; ++p) {
    out.nu[p] = ConvexCombine(a.nu[p], b.nu[p], lambda);
  }
  out.gadget_exploitability = std::numeric_limits<double>::quiet_NaN();
  out.iterations = 0;
  return out;
}

// ---------------------------------------------------------------------------
// Verification.

VerificationReport VerifyValueVector(const Game& game, const RangeBundle& range,
                                     const ValueVector values[kNumPlayers],
                                     const VerifyOptions& options) {
  const int state = range.state;
  for (int p = 1; p <= kNumPlayers; ++p) {
    const InfoPartition& part = game.augmented(p);
    std::vector<std::string> expected;
    for (int s : StateSets(game, p, state)) expected.push_back(part.keys[s]);
    if (values[p - 1].keys != expected || values[p - 1].player != p ||
        values[p - 1].level != ValueLevel::kInfoset) {
      throw EfgError(ErrorCode::kInvalidArgument,
                     "player " + std::to_string(p) +
                         " values must cover exactly the augmented sets of "
                         "the public state");
    }
  }
  StrategyProfile sigma;
  if (options.sigma != nullptr) {
    sigma = *options.sigma;
  } else {
    const StrategyProfile trunk = options.trunk != nullptr
                                      ? *options.trunk
                                      : SynthesizeTrunk(game, range);
    sigma = CrosApproximate(game, state, trunk, options.resolve).strategy;
  }
  VerificationReport report;
  const ReachTable reach(game, sigma);
  report.range_gap =
      RangeDistance(RangeFromReach(game, reach, state, range.repr), range);
  const bool joint_input =
      range.repr == RangeRepr::kJoint || range.repr == RangeRepr::kSeparated;
  report.gadget_exploitability = GadgetExploitability(
      game, joint_input ? range
                        : RangeFromReach(game, reach, state, RangeRepr::kJoint),
      sigma);
  for (int p = 1; p <= kNumPlayers; ++p) {
    const InfoPartition& part = game.augmented(p);
    const BestResponseResult br = CfBestResponse(game, sigma, p);
    const ValueVector& v = values[p - 1];
    const std::vector<int> sets = StateSets(game, p, state);
    for (size_t k = 0; k < sets.size(); ++k) {
      double reference = br.cf_values.values[sets[k]];
      if (v.kind == ValueKind::kNormalized) {
        const double weight =
            ComputeInfosetReach(game, reach, p, sets[k]).counterfactual;
        if (!(weight > 0.0)) continue;
        reference /= weight;
      }
      const double gap = std::abs(v.values[k] - reference);
      if (gap > report.cbr_gap || report.worst_set.empty()) {
        report.worst_set = part.keys[sets[k]];
        report.cbr_gap = gap;
      }
    }
  }
  report.residual = std::max(
      {report.range_gap, report.gadget_exploitability, report.cbr_gap});

  if (options.constructive) {
    SubgameSolution constant;
    constant.state = state;
    for (int p = 0; p < kNumPlayers; ++p) {
      constant.nu[p] = values[p];
      if (constant.nu[p].kind == ValueKind::kNormalized) {
        // The oracle contract is counterfactual: scale by the reach of the
        // reference profile.
        const std::vector<int> sets = StateSets(game, p + 1, state);
        for (size_t k = 0; k < sets.size(); ++k) {
          constant.nu[p].values[k] *=
              ComputeInfosetReach(game, reach, p + 1, sets[k]).counterfactual;
        }
        constant.nu[p].kind = ValueKind::kCounterfactual;
      }
    }
    const TrunkSpec trunk = TrunkSpec::AboveState(game, state);
    const CfrdResult cfrd = CfrdSolve(
        game, trunk, MakeConstantOracle({{state, constant}}), options.cfrd);
    const StrategyProfile completed = CompleteTrunkProfile(
        game, trunk, cfrd.trunk_strategy, options.resolve);
    report.constructive_exploitability = Exploitability(game, completed);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Datasets.

std::string DumpDataset(const Game& game, int state, int samples,
                        std::uint64_t seed, const ResolveOptions& options) {
  if (samples < 0) {
    throw EfgError(ErrorCode::kInvalidArgument, "samples must be >= 0");
  }
  const PublicState& public_state = StateOf(game, state);
  std::mt19937_64 rng(seed);
  std::ostringstream out;
  out << "# game\t" << game.name() << '\n';
  out << "# state\t" << public_state.id << '\n';
  out << "# sample\tcompact_range\tvalues_p1\tvalues_p2\tresidual\n";
  auto entries = [](const std::vector<std::string>& keys,
                    const std::vector<double>& values) {
    std::string text;
    for (size_t k = 0; k < keys.size(); ++k) {
      if (k > 0) text += ';';
      text += keys[k] + '=' + FormatDouble(values[k]);
    }
    return text;
  };
  for (int i = 0; i < samples; ++i) {
    const StrategyProfile trunk = StrategyProfile::Random(game, rng);
    const RangeBundle range =
        RangeAt(game, trunk, state, RangeRepr::kSeparated);
    const SubgameSolution solution =
        ExactSubgameSolve(game, range, &trunk, options);
    VerifyOptions verify;
    verify.sigma = &solution.strategy;
    const VerificationReport report =
        VerifyValueVector(game, range, solution.nu, verify);
    const RangeBundle compact = ConvertRange(game, range, RangeRepr::kCompact);
    std::vector<double> compact_values;
    for (const auto& v : compact.values) compact_values.push_back(v[0]);
    out << i << '\t' << entries(compact.keys, compact_values) << '\t'
        << entries(solution.nu[0].keys, solution.nu[0].values) << '\t'
        << entries(solution.nu[1].keys, solution.nu[1].values) << '\t'
        << FormatDouble(report.residual) << '\n';
  }
  return out.str();
}

}  // namespace efgval
