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

#include "efgval/cfr.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "efgval/reach.h"
#include "efgval/text_io.h"
#include "efgval/values.h"

namespace efgval {

RegretTable::RegretTable(const Game& game) {
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (const Infoset& infoset : game.infosets(p)) {
      regrets_[p - 1].emplace_back(infoset.num_actions(), 0.0);
      strategy_sum_[p - 1].emplace_back(infoset.num_actions(), 0.0);
    }
  }
}

std::vector<double> RegretMatching(std::span<const double> regrets) {
  std::vector<double> dist(regrets.size(), 0.0);
  double positive = 0.0;
  for (double r : regrets) positive += std::max(r, 0.0);
  if (positive > 0.0) {
    for (size_t a = 0; a < regrets.size(); ++a) {
      dist[a] = std::max(regrets[a], 0.0) / positive;
    }
  } else {
    std::fill(dist.begin(), dist.end(), 1.0 / regrets.size());
  }
  return dist;
}

StrategyProfile RegretTable::CurrentStrategy(const Game& game) const {
  StrategyProfile profile = StrategyProfile::Uniform(game);
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < num_infosets(p); ++i) {
      const std::vector<double> dist = RegretMatching(regrets(p, i));
      std::copy(dist.begin(), dist.end(), profile.mutable_at(p, i).begin());
    }
  }
  return profile;
}

void CfrIteration(const Game& game, RegretTable& table) {
  const StrategyProfile sigma = table.CurrentStrategy(game);
  const ReachTable reach(game, sigma);
  const std::vector<double> v1 = HistoryValues(game, sigma, 1);
  for (NodeId h = 0; h < game.num_nodes(); ++h) {
    const Node& node = game.node(h);
    if (!node.is_decision()) continue;
    const int p = node.player;
    const double sign = p == 1 ? 1.0 : -1.0;
    const double cf = reach.Counterfactual(p, h);
    auto regrets = table.regrets(p, node.infoset_index);
    for (int a = 0; a < node.num_actions(); ++a) {
      regrets[a] += cf * sign * (v1[node.children[a]] - v1[h]);
    }
  }
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < table.num_infosets(p); ++i) {
      const double own = reach.player(p, game.infoset(p, i).members.front());
      auto sum = table.strategy_sum(p, i);
      const auto dist = sigma.at(p, i);
      for (size_t a = 0; a < sum.size(); ++a) sum[a] += own * dist[a];
    }
  }
  table.set_iterations(table.iterations() + 1);
}

StrategyProfile AverageStrategy(const Game& game, const RegretTable& table) {
  StrategyProfile profile = StrategyProfile::Uniform(game);
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < table.num_infosets(p); ++i) {
      const auto sum = table.strategy_sum(p, i);
      double total = 0.0;
      for (double x : sum) total += x;
      if (!(total > 0.0)) continue;
      auto dist = profile.mutable_at(p, i);
      for (size_t a = 0; a < sum.size(); ++a) dist[a] = sum[a] / total;
    }
  }
  return profile;
}

int NextCheckpoint(int t, double growth) {
  if (growth > 1.0) {
    return std::max(t + 1, static_cast<int>(std::ceil(t * growth)));
  }
  // 1, 2, 5, 10, 20, 50, ...
  int scale = 1;
  while (scale * 10 <= t) scale *= 10;
  for (int mult : {1, 2, 5, 10}) {
    if (mult * scale > t) return mult * scale;
  }
  return 10 * scale;
}

CfrResult SolveCfr(const Game& game, const CfrOptions& options) {
  if (options.iterations < 1) {
    throw EfgError(ErrorCode::kInvalidArgument, "iterations must be >= 1");
  }
  CfrResult result;
  result.table = RegretTable(game);
  CfrDiagnostics& diag = result.diagnostics;
  int next_check = 1;
  for (int t = 1; t <= options.iterations; ++t) {
    CfrIteration(game, result.table);
    if (t != next_check && t != options.iterations) continue;
    next_check = NextCheckpoint(t, options.checkpoint_growth);
    result.strategy = AverageStrategy(game, result.table);
    const double expl = Exploitability(game, result.strategy);
    diag.trace.emplace_back(t, expl);
    diag.iterations_run = t;
    diag.final_exploitability = expl;
    if (!options.stop_at_exploitability) continue;
    const double target = *options.stop_at_exploitability;
    if (expl <= target) {
      diag.stopped_early = t < options.iterations;
      break;
    }
    if (options.check_current) {
      StrategyProfile current = result.table.CurrentStrategy(game);
      const double current_expl = Exploitability(game, current);
      if (current_expl <= target) {
        result.strategy = std::move(current);
        diag.final_exploitability = current_expl;
        diag.returned_current = true;
        diag.stopped_early = t < options.iterations;
        break;
      }
    }
  }
  return result;
}

std::string WriteDiagnostics(const CfrDiagnostics& diagnostics) {
  std::ostringstream out;
  out << "# iteration\texploitability\n";
  for (const auto& [t, expl] : diagnostics.trace) {
    out << t << '\t' << FormatDouble(expl) << '\n';
  }
  return out.str();
}

}  // namespace efgval
