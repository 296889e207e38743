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

#include "efgval/strategy.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "efgval/text_io.h"

namespace efgval {

StrategyProfile StrategyProfile::Uniform(const Game& game) {
  StrategyProfile profile;
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (const Infoset& infoset : game.infosets(p)) {
      const int n = infoset.num_actions();
      profile.probs_[p - 1].emplace_back(n, 1.0 / n);
    }
  }
  return profile;
}

StrategyProfile StrategyProfile::Random(const Game& game,
                                        std::mt19937_64& rng) {
  StrategyProfile profile = Uniform(game);
  std::exponential_distribution<double> gamma_one(1.0);
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (auto& dist : profile.probs_[p - 1]) {
      double total = 0.0;
      for (double& x : dist) {
        x = gamma_one(rng);
        total += x;
      }
      for (double& x : dist) x /= total;
    }
  }
  return profile;
}

double StrategyProfile::ActionProb(const Game& game, NodeId h, int a) const {
  const Node& node = game.node(h);
  if (node.is_chance()) return node.chance_probs[a];
  return probs_[node.player - 1][node.infoset_index][a];
}

void StrategyProfile::SetPure(int player, int infoset, int action) {
  auto& dist = probs_[player - 1][infoset];
  std::fill(dist.begin(), dist.end(), 0.0);
  dist[action] = 1.0;
}

std::string InfosetKey(const Game& game, int player, int infoset) {
  return std::to_string(player) + ":" + game.infoset(player, infoset).label;
}

namespace {

// Resolves "<player>:<label>" into (player, infoset index).
std::pair<int, int> ResolveInfosetKey(const Game& game, std::string_view key) {
  const size_t colon = key.find(':');
  if (colon == std::string_view::npos ||
      (key.substr(0, colon) != "1" && key.substr(0, colon) != "2")) {
    throw EfgError(ErrorCode::kUnknownKey,
                   "infoset key must look like <player>:<label>, got '" +
                       std::string(key) + "'");
  }
  const int player = key[0] - '0';
  const int index = game.FindInfoset(player, key.substr(colon + 1));
  if (index < 0) {
    throw EfgError(ErrorCode::kUnknownKey,
                   "unknown infoset '" + std::string(key) + "'");
  }
  return {player, index};
}

int ResolveAction(const Infoset& infoset, std::string_view action) {
  auto it = std::find(infoset.actions.begin(), infoset.actions.end(), action);
  if (it == infoset.actions.end()) {
    throw EfgError(ErrorCode::kUnknownKey, "infoset '" + infoset.label +
                                               "' has no action '" +
                                               std::string(action) + "'");
  }
  return static_cast<int>(it - infoset.actions.begin());
}

}  // namespace

void SetPureByLabel(const Game& game, StrategyProfile& profile,
                    std::string_view infoset_key, std::string_view action) {
  auto [player, index] = ResolveInfosetKey(game, infoset_key);
  profile.SetPure(player, index,
                  ResolveAction(game.infoset(player, index), action));
}

StrategyProfile NoisyProfile(const Game& game, const StrategyProfile& sigma,
                             double n) {
  (void)game;
  StrategyProfile out = sigma;
  const double w = 1.0 / n;
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < out.num_infosets(p); ++i) {
      auto dist = out.mutable_at(p, i);
      const double uniform = 1.0 / static_cast<double>(dist.size());
      for (double& x : dist) x = (1.0 - w) * x + w * uniform;
    }
  }
  return out;
}

namespace {

// Own reach probability of the first member of every infoset of the player.
std::vector<double> OwnInfosetReach(const Game& game,
                                    const StrategyProfile& profile,
                                    int player) {
  std::vector<double> own(game.num_nodes(), 1.0);
  for (NodeId h = 1; h < game.num_nodes(); ++h) {
    const Node& node = game.node(h);
    const Node& parent = game.node(node.parent);
    own[h] = own[node.parent];
    if (parent.is_decision() && parent.player == player) {
      own[h] *= profile.ActionProb(game, node.parent, node.parent_action);
    }
  }
  std::vector<double> out;
  for (const Infoset& infoset : game.infosets(player)) {
    out.push_back(own[infoset.members.front()]);
  }
  return out;
}

}  // namespace

StrategyProfile MixRealization(const Game& game, const StrategyProfile& a,
                               const StrategyProfile& b, double lambda) {
  StrategyProfile out = a;
  for (int p = 1; p <= kNumPlayers; ++p) {
    const std::vector<double> reach_a = OwnInfosetReach(game, a, p);
    const std::vector<double> reach_b = OwnInfosetReach(game, b, p);
    for (int i = 0; i < out.num_infosets(p); ++i) {
      auto dist = out.mutable_at(p, i);
      const auto da = a.at(p, i);
      const auto db = b.at(p, i);
      const double wa = lambda * reach_a[i];
      const double wb = (1.0 - lambda) * reach_b[i];
      const double total = wa + wb;
      for (size_t k = 0; k < dist.size(); ++k) {
        dist[k] = total > 0.0 ? (wa * da[k] + wb * db[k]) / total
                              : 1.0 / static_cast<double>(dist.size());
      }
    }
  }
  return out;
}

void CopyPlayer(int player, const StrategyProfile& src, StrategyProfile& dst) {
  for (int i = 0; i < src.num_infosets(player); ++i) {
    auto from = src.at(player, i);
    std::copy(from.begin(), from.end(), dst.mutable_at(player, i).begin());
  }
}

double MaxNormalizationError(const StrategyProfile& profile) {
  double worst = 0.0;
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < profile.num_infosets(p); ++i) {
      double total = 0.0;
      for (double x : profile.at(p, i)) {
        if (x < 0.0) worst = std::max(worst, -x);
        total += x;
      }
      worst = std::max(worst, std::abs(total - 1.0));
    }
  }
  return worst;
}

std::string WriteStrategy(const Game& game, const StrategyProfile& profile) {
  std::ostringstream out;
  for (int p = 1; p <= kNumPlayers; ++p) {
    for (int i = 0; i < profile.num_infosets(p); ++i) {
      const Infoset& infoset = game.infoset(p, i);
      const auto dist = profile.at(p, i);
      for (int a = 0; a < infoset.num_actions(); ++a) {
        out << InfosetKey(game, p, i) << '\t' << infoset.actions[a] << '\t'
            << FormatDouble(dist[a]) << '\n';
      }
    }
  }
  return out.str();
}

StrategyProfile ReadStrategy(const Game& game, std::string_view text) {
  StrategyProfile profile = StrategyProfile::Uniform(game);
  int line_number = 0;
  for (const std::string& line : DataLines(text)) {
    ++line_number;
    const std::vector<std::string> fields = SplitString(line, '\t');
    if (fields.size() != 3) {
      throw EfgError(ErrorCode::kSyntax,
                     "strategy row " + std::to_string(line_number) +
                         ": expected <infoset>\t<action>\t<prob>");
    }
    auto [player, index] = ResolveInfosetKey(game, fields[0]);
    const int action = ResolveAction(game.infoset(player, index), fields[1]);
    profile.mutable_at(player, index)[action] = ParseDouble(fields[2]);
  }
  if (MaxNormalizationError(profile) > 1e-9) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "strategy distributions must be non-negative and sum to 1");
  }
  return profile;
}

}  // namespace efgval
