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

#include "efgval/values.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "efgval/text_io.h"

namespace efgval {

double ValueVector::at(std::string_view key) const {
  for (size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] == key) return values[i];
  }
  throw EfgError(ErrorCode::kUnknownKey,
                 "value vector has no entry '" + std::string(key) + "'");
}

double MaxAbsDifference(const ValueVector& a, const ValueVector& b) {
  if (a.keys != b.keys) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "value vectors have different keys");
  }
  double worst = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  }
  return worst;
}

std::string WriteValueVector(const ValueVector& vector) {
  std::ostringstream out;
  out << "# player " << vector.player << ", "
      << (vector.kind == ValueKind::kNormalized ? "normalized"
                                                : "counterfactual")
      << ", " << (vector.level == ValueLevel::kInfoset ? "infoset" : "history")
      << '\n';
  for (size_t i = 0; i < vector.keys.size(); ++i) {
    out << vector.keys[i] << '\t' << FormatDouble(vector.values[i]) << '\n';
  }
  return out.str();
}

std::vector<double> HistoryValues(const Game& game,
                                  const StrategyProfile& profile, int player) {
  std::vector<double> values(game.num_nodes(), 0.0);
  for (NodeId h = game.num_nodes() - 1; h >= 0; --h) {
    const Node& node = game.node(h);
    if (node.is_terminal()) {
      values[h] = game.Utility(h, player);
      continue;
    }
    double v = 0.0;
    for (int a = 0; a < node.num_actions(); ++a) {
      v += profile.ActionProb(game, h, a) * values[node.children[a]];
    }
    values[h] = v;
  }
  return values;
}

double HistoryValue(const Game& game, const StrategyProfile& profile,
                    int player, NodeId h) {
  return HistoryValues(game, profile, player)[h];
}

double ActionValue(const Game& game, const StrategyProfile& profile,
                   int player, NodeId h, int action) {
  const Node& node = game.node(h);
  if (action < 0 || action >= node.num_actions()) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "history " + game.PathKey(h) + " has no action index " +
                       std::to_string(action));
  }
  return HistoryValues(game, profile, player)[node.children[action]];
}

double CfHistoryValue(const Game& game, const StrategyProfile& profile,
                      int player, NodeId h) {
  return Reach(game, profile, h).counterfactual[player - 1] *
         HistoryValue(game, profile, player, h);
}

double CfActionValue(const Game& game, const StrategyProfile& profile,
                     int player, NodeId h, int action) {
  return Reach(game, profile, h).counterfactual[player - 1] *
         ActionValue(game, profile, player, h, action);
}

double ExpectedUtility(const Game& game, const StrategyProfile& profile,
                       int player) {
  return HistoryValues(game, profile, player)[game.root()];
}

std::vector<double> InfosetValuesFrom(const Game& game, const ReachTable& reach,
                                      const std::vector<double>& history_values,
                                      int player, ValueKind kind) {
  const InfoPartition& part = game.augmented(player);
  std::vector<double> out(part.size(), 0.0);
  for (int s = 0; s < part.size(); ++s) {
    const auto& members = part.sets[s];
    if (kind == ValueKind::kCounterfactual) {
      double v = 0.0;
      for (NodeId h : members) {
        v += reach.Counterfactual(player, h) * history_values[h];
      }
      out[s] = v;
    } else {
      const std::vector<double> cond =
          CondDistribution(game, reach, player, s);
      double v = 0.0;
      for (size_t i = 0; i < members.size(); ++i) {
        v += cond[i] * history_values[members[i]];
      }
      out[s] = v;
    }
  }
  return out;
}

std::vector<double> InfosetValues(const Game& game,
                                  const StrategyProfile& profile, int player,
                                  ValueKind kind) {
  return InfosetValuesFrom(game, ReachTable(game, profile),
                           HistoryValues(game, profile, player), player, kind);
}

double InfosetValue(const Game& game, const StrategyProfile& profile,
                    int player, int set) {
  return InfosetValues(game, profile, player, ValueKind::kNormalized).at(set);
}

double CfInfosetValue(const Game& game, const StrategyProfile& profile,
                      int player, int set) {
  return InfosetValues(game, profile, player, ValueKind::kCounterfactual)
      .at(set);
}

double CfInfosetActionValue(const Game& game, const StrategyProfile& profile,
                            int player, int set, int action) {
  const InfoPartition& part = game.augmented(player);
  if (!part.is_decision(set)) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   part.keys[set] + " is not a decision set of player " +
                       std::to_string(player));
  }
  const ReachTable reach(game, profile);
  const std::vector<double> values = HistoryValues(game, profile, player);
  double q = 0.0;
  for (NodeId h : part.sets[set]) {
    q += reach.Counterfactual(player, h) *
         values[game.node(h).children.at(action)];
  }
  return q;
}

ValueVector InfosetValueVector(const Game& game,
                               const StrategyProfile& profile, int player,
                               ValueKind kind, const std::vector<int>& sets) {
  const std::vector<double> all = InfosetValues(game, profile, player, kind);
  ValueVector out;
  out.player = player;
  out.kind = kind;
  out.level = ValueLevel::kInfoset;
  for (int s : sets) {
    out.keys.push_back(game.augmented(player).keys[s]);
    out.values.push_back(all[s]);
  }
  return out;
}

ValueVector InfosetValueVector(const Game& game,
                               const StrategyProfile& profile, int player,
                               ValueKind kind) {
  std::vector<int> sets(game.augmented(player).size());
  for (int s = 0; s < static_cast<int>(sets.size()); ++s) sets[s] = s;
  return InfosetValueVector(game, profile, player, kind, sets);
}

ValueVector HistoryValueVector(const Game& game,
                               const StrategyProfile& profile, int player,
                               ValueKind kind,
                               const std::vector<NodeId>& histories) {
  const std::vector<double> values = HistoryValues(game, profile, player);
  const ReachTable reach(game, profile);
  ValueVector out;
  out.player = player;
  out.kind = kind;
  out.level = ValueLevel::kHistory;
  for (NodeId h : histories) {
    out.keys.push_back(game.PathKey(h));
    out.values.push_back(kind == ValueKind::kNormalized
                             ? values[h]
                             : reach.Counterfactual(player, h) * values[h]);
  }
  return out;
}

bool AxiomReport::passed() const { return Violations().empty(); }

double AxiomReport::MaxResidual(std::string_view check) const {
  double worst = 0.0;
  for (const AxiomEntry& entry : entries) {
    if (check.empty() || entry.check == check) {
      worst = std::max(worst, entry.residual);
    }
  }
  return worst;
}

std::vector<AxiomEntry> AxiomReport::Violations() const {
  std::vector<AxiomEntry> out;
  for (const AxiomEntry& entry : entries) {
    if (!(entry.residual <= tolerance)) out.push_back(entry);
  }
  return out;
}

namespace {

void CollectDescendants(const InfoPartition& part, int set,
                        std::vector<int>& out) {
  for (int child : part.children[set]) {
    out.push_back(child);
    CollectDescendants(part, child, out);
  }
}

}  // namespace

AxiomReport CheckValueAxioms(const Game& game, const StrategyProfile& profile,
                             int player, const ValueVector& values,
                             double tolerance) {
  const InfoPartition& part = game.augmented(player);
  if (values.level != ValueLevel::kInfoset || values.keys != part.keys) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "axiom checks need an infoset-level vector over all "
                   "augmented sets in canonical order");
  }
  const bool cf = values.kind == ValueKind::kCounterfactual;
  const ReachTable reach(game, profile);
  const std::vector<double> history_values =
      HistoryValues(game, profile, player);
  const std::vector<double> expected = InfosetValuesFrom(
      game, reach, history_values, player, values.kind);
  const double u_min = game.MinUtility(player);
  const double u_max = game.MaxUtility(player);
  const std::vector<double>& v = values.values;

  AxiomReport report;
  report.tolerance = tolerance;
  auto add = [&report](const char* check, const std::string& where,
                       double residual) {
    report.entries.push_back({check, where, residual});
  };

  for (int s = 0; s < part.size(); ++s) {
    const std::string& where = part.keys[s];
    add("definition", where, std::abs(v[s] - expected[s]));
    const InfosetReach set_reach = ComputeInfosetReach(game, reach, player, s);

    // Bounds: normalized values lie within the utility range, counterfactual
    // values within the range scaled by the counterfactual reach.
    const double scale = cf ? set_reach.counterfactual : 1.0;
    const double lo = scale * u_min;
    const double hi = scale * u_max;
    add("bounds", where, std::max({0.0, lo - v[s], v[s] - hi}));

    if (part.children[s].empty()) {
      const NodeId z = part.sets[s].front();
      if (game.node(z).is_terminal()) {
        const double u = game.Utility(z, player);
        add("terminal", where,
            std::abs(v[s] - (cf ? reach.Counterfactual(player, z) * u : u)));
      }
      continue;
    }
    if (!cf && !(set_reach.counterfactual > 0.0)) continue;

    auto weight = [&](int j) {
      const CondInfosetReach cond =
          ComputeCondInfosetReach(game, profile, reach, player, s, j);
      return cf ? cond.own : cond.total;
    };
    double recursion = 0.0;
    for (int j : part.children[s]) recursion += weight(j) * v[j];
    add("recursion", where, std::abs(v[s] - recursion));

    // Slices: for every frontier depth below s, the minimal descendants at
    // that depth together with shallower leaves.
    std::vector<int> descendants;
    CollectDescendants(part, s, descendants);
    int max_depth = part.depth[s];
    for (int j : descendants) max_depth = std::max(max_depth, part.depth[j]);
    for (int d = part.depth[s] + 2; d <= max_depth; ++d) {
      double total = 0.0;
      for (int j : descendants) {
        const bool at_frontier = part.depth[j] == d;
        const bool shallow_leaf =
            part.depth[j] < d && part.children[j].empty();
        if (at_frontier || shallow_leaf) total += weight(j) * v[j];
      }
      add("slice", where + " depth " + std::to_string(d),
          std::abs(v[s] - total));
    }
  }
  const double root_value = history_values[game.root()];
  add("root", part.keys[part.set_of[game.root()]],
      std::abs(v[part.set_of[game.root()]] - root_value));
  return report;
}

BestResponseResult CfBestResponse(const Game& game,
                                  const StrategyProfile& profile, int player,
                                  const WeightOverrides& overrides) {
  const int n = game.num_nodes();
  std::vector<double> weight(n, 1.0);
  std::vector<char> overridden(n, 0);
  for (const auto& [h, w] : overrides) {
    weight[h] = w;
    overridden[h] = 1;
  }
  for (NodeId h = 1; h < n; ++h) {
    if (overridden[h]) continue;
    const Node& node = game.node(h);
    const Node& parent = game.node(node.parent);
    weight[h] = weight[node.parent];
    if (!(parent.is_decision() && parent.player == player)) {
      weight[h] *= profile.ActionProb(game, node.parent, node.parent_action);
    }
  }

  const InfoPartition& part = game.augmented(player);
  std::vector<double> set_value(part.size(), 0.0);
  BestResponseResult result;
  result.player = player;
  result.strategy = profile;
  for (int s = part.size() - 1; s >= 0; --s) {
    const auto& members = part.sets[s];
    if (part.children[s].empty()) {
      double v = 0.0;
      for (NodeId z : members) {
        if (game.node(z).is_terminal()) {
          v += weight[z] * game.Utility(z, player);
        }
      }
      set_value[s] = v;
      continue;
    }
    if (!part.is_decision(s)) {
      double v = 0.0;
      for (int c : part.children[s]) v += set_value[c];
      set_value[s] = v;
      continue;
    }
    const int infoset = part.declared[s];
    std::vector<double> q(game.infoset(player, infoset).num_actions(), 0.0);
    for (int c : part.children[s]) q[part.parent_action[c]] += set_value[c];
    int best = 0;
    for (int a = 1; a < static_cast<int>(q.size()); ++a) {
      if (q[a] > q[best]) best = a;
    }
    set_value[s] = q[best];
    result.strategy.SetPure(player, infoset, best);
  }
  result.sweep_value = set_value[part.set_of[game.root()]];
  result.value = ExpectedUtility(game, result.strategy, player);
  result.cf_values.player = player;
  result.cf_values.kind = ValueKind::kCounterfactual;
  result.cf_values.level = ValueLevel::kInfoset;
  result.cf_values.keys = part.keys;
  result.cf_values.values = std::move(set_value);
  return result;
}

BestResponseResult BestResponse(const Game& game,
                                const StrategyProfile& profile, int player) {
  return CfBestResponse(game, profile, player);
}

double Exploitability(const Game& game, const StrategyProfile& profile) {
  const double br1 = BestResponse(game, profile, 1).value;
  const double br2 = BestResponse(game, profile, 2).value;
  return 0.5 * (br1 + br2);
}

}  // namespace efgval
