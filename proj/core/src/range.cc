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

#include "efgval/range.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "efgval/text_io.h"

namespace efgval {
namespace {

constexpr std::array<std::pair<RangeRepr, std::string_view>, 8> kReprNames = {{
    {RangeRepr::kInfosetReachP1, "infoset-reach-p1"},
    {RangeRepr::kHistoryReachP1, "history-reach-p1"},
    {RangeRepr::kHistoryReachP1Chance, "history-reach-p1c"},
    {RangeRepr::kCounterfactualP2, "cf-reach-p2"},
    {RangeRepr::kConditionalP2, "cond-p2"},
    {RangeRepr::kSeparated, "separated"},
    {RangeRepr::kJoint, "joint"},
    {RangeRepr::kCompact, "compact"},
}};

int NumComponents(RangeRepr repr) {
  switch (repr) {
    case RangeRepr::kHistoryReachP1Chance:
      return 2;
    case RangeRepr::kSeparated:
      return 3;
    default:
      return 1;
  }
}

// Chance reach of h from the game rules.
double ChanceReach(const Game& game, NodeId h) {
  double prob = 1.0;
  for (NodeId v = h; game.node(v).parent != kNoNode; v = game.node(v).parent) {
    const Node& parent = game.node(game.node(v).parent);
    if (parent.is_chance()) prob *= parent.chance_probs[game.node(v).parent_action];
  }
  return prob;
}

// Reach of h when both players act uniformly, used as the last-resort
// conditional distribution of an unreachable set.
double UniformPlayReach(const Game& game, NodeId h) {
  double prob = 1.0;
  for (NodeId v = h; game.node(v).parent != kNoNode; v = game.node(v).parent) {
    const Node& parent = game.node(game.node(v).parent);
    prob *= parent.is_chance() ? parent.chance_probs[game.node(v).parent_action]
                               : 1.0 / parent.num_actions();
  }
  return prob;
}

// Per-member eta_1 and eta_c recovered from one of the generating
// representations.
void RecoverPlayerOneAndChance(const Game& game, const RangeBundle& bundle,
                               std::vector<double>& eta1,
                               std::vector<double>& chance) {
  const PublicState& state = game.public_tree().states.at(bundle.state);
  const size_t n = state.members.size();
  eta1.assign(n, 0.0);
  chance.assign(n, 0.0);
  for (size_t i = 0; i < n; ++i) chance[i] = ChanceReach(game, state.members[i]);
  switch (bundle.repr) {
    case RangeRepr::kInfosetReachP1: {
      const InfoPartition& part = game.augmented(1);
      for (size_t i = 0; i < n; ++i) {
        const int set = part.set_of[state.members[i]];
        eta1[i] = bundle.at(part.keys[set]);
      }
      break;
    }
    case RangeRepr::kHistoryReachP1:
    case RangeRepr::kHistoryReachP1Chance:
    case RangeRepr::kSeparated:
      for (size_t i = 0; i < n; ++i) {
        eta1[i] = bundle.values.at(i).at(0);
      }
      if (bundle.repr == RangeRepr::kHistoryReachP1Chance ||
          bundle.repr == RangeRepr::kSeparated) {
        const int c = bundle.repr == RangeRepr::kSeparated ? 2 : 1;
        for (size_t i = 0; i < n; ++i) chance[i] = bundle.values[i].at(c);
      }
      break;
    default:
      throw EfgError(ErrorCode::kUnsupported,
                     "cannot recover the range from representation " +
                         std::string(RangeReprName(bundle.repr)));
  }
}

RangeBundle Build(const Game& game, int state_index, RangeRepr repr,
                  const std::vector<double>& eta1,
                  const std::vector<double>& eta2,
                  const std::vector<double>& chance, bool have_eta2) {
  const PublicState& state = game.public_tree().states.at(state_index);
  RangeBundle out;
  out.state = state_index;
  out.repr = repr;
  const size_t n = state.members.size();
  auto member_index = [&state](NodeId h) {
    return static_cast<size_t>(
        std::lower_bound(state.members.begin(), state.members.end(), h) -
        state.members.begin());
  };
  auto add_set_entries = [&](int player, const std::vector<double>& own) {
    const InfoPartition& part = game.augmented(player);
    for (int set : StateSets(game, player, state_index)) {
      out.keys.push_back(part.keys[set]);
      out.values.push_back({own[member_index(part.sets[set].front())]});
    }
  };
  switch (repr) {
    case RangeRepr::kInfosetReachP1:
      add_set_entries(1, eta1);
      break;
    case RangeRepr::kCompact:
      if (!have_eta2) {
        throw EfgError(ErrorCode::kUnsupported,
                       "compact range needs player-2 reach");
      }
      add_set_entries(1, eta1);
      add_set_entries(2, eta2);
      break;
    case RangeRepr::kHistoryReachP1:
    case RangeRepr::kHistoryReachP1Chance:
    case RangeRepr::kSeparated:
    case RangeRepr::kJoint:
      if ((repr == RangeRepr::kSeparated || repr == RangeRepr::kJoint) &&
          !have_eta2) {
        throw EfgError(ErrorCode::kUnsupported,
                       std::string(RangeReprName(repr)) +
                           " range needs player-2 reach");
      }
      for (size_t i = 0; i < n; ++i) {
        out.keys.push_back(game.PathKey(state.members[i]));
        switch (repr) {
          case RangeRepr::kHistoryReachP1:
            out.values.push_back({eta1[i]});
            break;
          case RangeRepr::kHistoryReachP1Chance:
            out.values.push_back({eta1[i], chance[i]});
            break;
          case RangeRepr::kSeparated:
            out.values.push_back({eta1[i], eta2[i], chance[i]});
            break;
          default:
            out.values.push_back({eta1[i] * eta2[i] * chance[i]});
            break;
        }
      }
      break;
    case RangeRepr::kCounterfactualP2:
    case RangeRepr::kConditionalP2: {
      const InfoPartition& part = game.augmented(2);
      for (int set : StateSets(game, 2, state_index)) {
        std::vector<double> cf;
        double total = 0.0;
        for (NodeId h : part.sets[set]) {
          const size_t i = member_index(h);
          cf.push_back(eta1[i] * chance[i]);
          total += cf.back();
        }
        if (repr == RangeRepr::kCounterfactualP2) {
          out.keys.push_back(part.keys[set]);
          out.values.push_back({total});
          continue;
        }
        if (total <= 0.0) {
          total = 0.0;
          for (size_t k = 0; k < cf.size(); ++k) {
            cf[k] = UniformPlayReach(game, part.sets[set][k]);
            total += cf[k];
          }
        }
        for (size_t k = 0; k < cf.size(); ++k) {
          out.keys.push_back(game.PathKey(part.sets[set][k]));
          out.values.push_back(
              {total > 0.0 ? cf[k] / total : 1.0 / cf.size()});
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::string_view RangeReprName(RangeRepr repr) {
  for (const auto& [r, name] : kReprNames) {
    if (r == repr) return name;
  }
  return "unknown";
}

RangeRepr ParseRangeRepr(std::string_view name) {
  for (const auto& [r, n] : kReprNames) {
    if (n == name) return r;
  }
  throw EfgError(ErrorCode::kUnknownKey,
                 "unknown range representation '" + std::string(name) + "'");
}

double RangeBundle::at(std::string_view key, int component) const {
  for (size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] == key) return values[i].at(component);
  }
  throw EfgError(ErrorCode::kUnknownKey,
                 "range has no entry '" + std::string(key) + "'");
}

std::vector<int> StateSets(const Game& game, int player, int state) {
  const InfoPartition& part = game.augmented(player);
  std::vector<int> sets;
  for (NodeId h : game.public_tree().states.at(state).members) {
    sets.push_back(part.set_of[h]);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

RangeBundle RangeFromReach(const Game& game, const ReachTable& reach,
                           int state, RangeRepr repr) {
  const auto& members = game.public_tree().states.at(state).members;
  std::vector<double> eta1, eta2, chance;
  for (NodeId h : members) {
    eta1.push_back(reach.player(1, h));
    eta2.push_back(reach.player(2, h));
    chance.push_back(reach.chance(h));
  }
  return Build(game, state, repr, eta1, eta2, chance, true);
}

RangeBundle RangeAt(const Game& game, const StrategyProfile& profile,
                    int state, RangeRepr repr) {
  return RangeFromReach(game, ReachTable(game, profile), state, repr);
}

RangeBundle ConvertRange(const Game& game, const RangeBundle& bundle,
                         RangeRepr target) {
  std::vector<double> eta1, chance, eta2;
  RecoverPlayerOneAndChance(game, bundle, eta1, chance);
  const bool have_eta2 = bundle.repr == RangeRepr::kSeparated;
  if (have_eta2) {
    for (const auto& v : bundle.values) eta2.push_back(v.at(1));
  }
  return Build(game, bundle.state, target, eta1, eta2, chance, have_eta2);
}

RangeBundle JointRange(const Game& game, int state,
                       const std::vector<double>& masses) {
  const auto& members = game.public_tree().states.at(state).members;
  if (masses.size() != members.size()) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "public state " + game.public_tree().states[state].id +
                       " has " + std::to_string(members.size()) +
                       " histories but the range has " +
                       std::to_string(masses.size()) + " entries");
  }
  RangeBundle out;
  out.state = state;
  out.repr = RangeRepr::kJoint;
  for (size_t i = 0; i < members.size(); ++i) {
    if (!(masses[i] >= 0.0) || !std::isfinite(masses[i])) {
      throw EfgError(ErrorCode::kInvalidArgument,
                     "range entries must be finite and non-negative");
    }
    out.keys.push_back(game.PathKey(members[i]));
    out.values.push_back({masses[i]});
  }
  return out;
}

double RangeDistance(const RangeBundle& a, const RangeBundle& b) {
  if (a.keys != b.keys) {
    throw EfgError(ErrorCode::kInvalidArgument, "ranges have different keys");
  }
  double worst = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i].size() != b.values[i].size()) {
      throw EfgError(ErrorCode::kInvalidArgument,
                     "ranges have different entry shapes");
    }
    for (size_t k = 0; k < a.values[i].size(); ++k) {
      worst = std::max(worst, std::abs(a.values[i][k] - b.values[i][k]));
    }
  }
  return worst;
}

std::string WriteRange(const Game& game, const RangeBundle& bundle) {
  std::ostringstream out;
  out << "repr\t" << RangeReprName(bundle.repr) << '\n';
  out << "state\t" << game.public_tree().states.at(bundle.state).id << '\n';
  for (size_t i = 0; i < bundle.keys.size(); ++i) {
    out << bundle.keys[i];
    for (double v : bundle.values[i]) out << '\t' << FormatDouble(v);
    out << '\n';
  }
  return out.str();
}

RangeBundle ReadRange(const Game& game, std::string_view text) {
  const std::vector<std::string> lines = DataLines(text);
  if (lines.size() < 2) {
    throw EfgError(ErrorCode::kSyntax, "range document needs repr and state");
  }
  const auto repr_fields = SplitString(lines[0], '\t');
  const auto state_fields = SplitString(lines[1], '\t');
  if (repr_fields.size() != 2 || repr_fields[0] != "repr" ||
      state_fields.size() != 2 || state_fields[0] != "state") {
    throw EfgError(ErrorCode::kSyntax,
                   "range document must start with repr and state rows");
  }
  RangeBundle bundle;
  bundle.repr = ParseRangeRepr(repr_fields[1]);
  bundle.state = game.public_tree().Find(state_fields[1]);
  if (bundle.state < 0) {
    throw EfgError(ErrorCode::kUnknownKey,
                   "unknown public state '" + state_fields[1] + "'");
  }
  const int components = NumComponents(bundle.repr);
  for (size_t i = 2; i < lines.size(); ++i) {
    const auto fields = SplitString(lines[i], '\t');
    if (static_cast<int>(fields.size()) != components + 1) {
      throw EfgError(ErrorCode::kSyntax,
                     "range row " + std::to_string(i + 1) + " has " +
                         std::to_string(fields.size()) + " fields");
    }
    bundle.keys.push_back(fields[0]);
    std::vector<double> values;
    for (int k = 0; k < components; ++k) {
      values.push_back(ParseDouble(fields[k + 1]));
    }
    bundle.values.push_back(std::move(values));
  }
  // Reject documents whose keys do not match the canonical layout.
  const PublicState& state = game.public_tree().states[bundle.state];
  std::vector<double> ones(state.members.size(), 1.0);
  const RangeBundle layout = Build(game, bundle.state, bundle.repr, ones, ones,
                                   ones, true);
  if (layout.keys != bundle.keys) {
    throw EfgError(ErrorCode::kUnknownKey,
                   "range keys do not match the histories or sets of state " +
                       state.id);
  }
  return bundle;
}

}  // namespace efgval
