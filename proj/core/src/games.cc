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

#include "efgval/games.h"

#include <cmath>

namespace efgval {
namespace {

using Moves = std::vector<std::pair<std::string, NodeSpec>>;
using Outcomes = std::vector<std::tuple<std::string, double, NodeSpec>>;

NodeSpec T(double u) { return NodeSpec::Terminal(u); }

int CardRank(char card) {
  switch (card) {
    case 'J':
      return 0;
    case 'Q':
      return 1;
    default:
      return 2;
  }
}

}  // namespace

const std::vector<std::string>& CatalogNames() {
  static const std::vector<std::string> names = {
      "matching_pennies",   "kuhn_poker",          "fig1_tradeoff",
      "fig2a_infoset_values", "fig2b_prepare",     "fig2c_LR",
      "fig4_left_oneplayer", "thm3_chain",
  };
  return names;
}

const std::vector<std::string>& ExtraGameNames() {
  static const std::vector<std::string> names = {"mdp_oneplayer",
                                                 "perfect_info_duel"};
  return names;
}

Game MatchingPennies() {
  auto p2 = [](double heads, double tails) {
    return NodeSpec::Decision(2, "P2", Moves{{"H", T(heads)}, {"T", T(tails)}});
  };
  return Game::FromSpec(
      "matching_pennies",
      NodeSpec::Decision(1, "P1", Moves{{"H", p2(1, 0)}, {"T", p2(0, 1)}}));
}

Game KuhnPoker() {
  Outcomes deals;
  const std::string cards = "JQK";
  for (char c1 : cards) {
    for (char c2 : cards) {
      if (c1 == c2) continue;
      const double showdown = CardRank(c1) > CardRank(c2) ? 1.0 : -1.0;
      const std::string own1(1, c1);
      const std::string own2(1, c2);
      // Player 1 checks, player 2 bets, player 1 folds or calls.
      NodeSpec p1_after_bet = NodeSpec::Decision(
          1, own1 + ":pb", Moves{{"p", T(-1)}, {"b", T(2 * showdown)}});
      NodeSpec p2_after_check = NodeSpec::Decision(
          2, own2 + ":p",
          Moves{{"p", T(showdown)}, {"b", std::move(p1_after_bet)}});
      NodeSpec p2_after_bet = NodeSpec::Decision(
          2, own2 + ":b", Moves{{"p", T(1)}, {"b", T(2 * showdown)}});
      NodeSpec p1 = NodeSpec::Decision(
          1, own1,
          Moves{{"p", std::move(p2_after_check)}, {"b", std::move(p2_after_bet)}});
      deals.emplace_back(own1 + own2, 1.0 / 6.0, std::move(p1));
    }
  }
  return Game::FromSpec("kuhn_poker", NodeSpec::Chance(std::move(deals)));
}

Game Fig1Tradeoff() {
  // Path utilities are the sums of the edge rewards: below g1, action a of
  // player 1 earns 1 unless player 2 answers c, and b loses 1 unless player 2
  // answers d; below g2 the signs are reversed.
  auto h = [](double c, double d) {
    return NodeSpec::Decision(2, "H", Moves{{"c", T(c)}, {"d", T(d)}});
  };
  auto g = [&h](double ac, double ad, double bc, double bd) {
    return NodeSpec::Decision(1, "I", Moves{{"a", h(ac, ad)}, {"b", h(bc, bd)}});
  };
  return Game::FromSpec(
      "fig1_tradeoff",
      NodeSpec::Chance(Outcomes{{"g1", 0.5, g(0, 1, -1, 0)},
                                {"g2", 0.5, g(0, -1, 1, 0)}}));
}

Game Fig2aInfosetValues() {
  auto node = [](double l, double r) {
    return NodeSpec::Decision(2, "AB", Moves{{"l", T(l)}, {"r", T(r)}});
  };
  return Game::FromSpec(
      "fig2a_infoset_values",
      NodeSpec::Chance(Outcomes{{"A", 0.5, node(0, 1)}, {"B", 0.5, node(1, 0)}}));
}

Game Fig2bPrepare() {
  // Player 2 prepares for A or B; player 1 learns the chance outcome and
  // has a single move. Player 1 wins unless player 2 prepared correctly.
  auto p1 = [](const std::string& infoset, double u) {
    return NodeSpec::Decision(1, infoset, Moves{{"d", T(u)}});
  };
  auto deal = [&p1](double u_a, double u_b) {
    return NodeSpec::Chance(
        Outcomes{{"A", 0.5, p1("I_A", u_a)}, {"B", 0.5, p1("I_B", u_b)}});
  };
  return Game::FromSpec(
      "fig2b_prepare",
      NodeSpec::Decision(2, "prepare",
                         Moves{{"PfA", deal(0, 1)}, {"PfB", deal(1, 0)}}));
}

Game Fig2cLR() {
  NodeSpec x = NodeSpec::Decision(2, "X", Moves{{"G", T(0)}, {"B", T(1)}});
  NodeSpec left = NodeSpec::Decision(2, "LR", Moves{{"w", T(1)}});
  NodeSpec right = NodeSpec::Decision(2, "LR", Moves{{"w", std::move(x)}});
  return Game::FromSpec(
      "fig2c_LR",
      NodeSpec::Decision(1, "root",
                         Moves{{"L", std::move(left)}, {"R", std::move(right)}}));
}

Game Fig4LeftOnePlayer() {
  auto node = [](double l, double r) {
    return NodeSpec::Decision(1, "I", Moves{{"L", T(l)}, {"R", T(r)}});
  };
  return Game::FromSpec(
      "fig4_left_oneplayer",
      NodeSpec::Chance(Outcomes{{"A", 0.5, node(0, 1)}, {"B", 0.5, node(1, 0)}}));
}

int Thm3LinkPlayer(int n, int i) { return (n - 1 - i) % 2 == 0 ? 1 : 2; }

Game Thm3Chain(int n, const std::vector<double>& range) {
  if (n < 1) {
    throw EfgError(ErrorCode::kInvalidArgument, "thm3_chain needs n >= 1");
  }
  std::vector<double> weights = range;
  if (weights.empty()) {
    weights = n == 2 ? std::vector<double>{0.3, 0.4, 0.3}
                     : std::vector<double>(n + 1, 1.0);
  }
  if (static_cast<int>(weights.size()) != n + 1) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "thm3_chain(" + std::to_string(n) + ") needs " +
                       std::to_string(n + 1) + " range weights");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw EfgError(ErrorCode::kInvalidArgument,
                     "thm3_chain range weights must be non-negative");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "thm3_chain range weights must not all be zero");
  }

  // Blocks joined by a link of player p share p's information set; the set
  // is named after the first block of the chain of such links.
  auto group = [n](int player, int block) {
    int first = block;
    while (first > 0 && Thm3LinkPlayer(n, first - 1) == player) --first;
    return std::string(player == 1 ? "X" : "Y") + std::to_string(first);
  };
  Outcomes blocks;
  for (int i = 0; i <= n; ++i) {
    NodeSpec block;
    if (i < n) {
      const std::string y = group(2, i);
      auto p2 = [&y](double l, double r) {
        return NodeSpec::Decision(2, y, Moves{{"L", T(l)}, {"R", T(r)}});
      };
      block = NodeSpec::Decision(1, group(1, i),
                                 Moves{{"U", p2(1, 0)}, {"D", p2(0, 1)}});
    } else {
      block = NodeSpec::Decision(1, group(1, i), Moves{{"U", T(0)}, {"D", T(1)}});
    }
    NodeSpec h = NodeSpec::Chance(Outcomes{{"d", 1.0, std::move(block)}});
    blocks.emplace_back("h" + std::to_string(i), weights[i] / total,
                        std::move(h));
  }
  // Renormalize so the probabilities sum to 1 exactly in floating point.
  double sum = 0.0;
  for (auto& outcome : blocks) sum += std::get<1>(outcome);
  std::get<1>(blocks.back()) += 1.0 - sum;
  if (std::get<1>(blocks.back()) < 0.0) std::get<1>(blocks.back()) = 0.0;
  return Game::FromSpec("thm3_chain", NodeSpec::Chance(std::move(blocks)));
}

Game MdpOnePlayer() {
  // Player 1 either takes 0.6 or gambles on a coin and then picks the
  // better of two terminal rewards.
  NodeSpec s1 = NodeSpec::Decision(1, "s1", Moves{{"x", T(1.0)}, {"y", T(0.2)}});
  NodeSpec s2 = NodeSpec::Decision(1, "s2", Moves{{"x", T(0.0)}, {"y", T(0.4)}});
  NodeSpec coin = NodeSpec::Chance(
      Outcomes{{"heads", 0.5, std::move(s1)}, {"tails", 0.5, std::move(s2)}});
  return Game::FromSpec(
      "mdp_oneplayer",
      NodeSpec::Decision(1, "s0", Moves{{"gamble", std::move(coin)},
                                        {"safe", T(0.6)}}));
}

Game PerfectInfoDuel() {
  NodeSpec left = NodeSpec::Decision(2, "after_l", Moves{{"x", T(3)}, {"y", T(-1)}});
  NodeSpec right = NodeSpec::Decision(2, "after_r", Moves{{"x", T(0)}, {"y", T(2)}});
  return Game::FromSpec(
      "perfect_info_duel",
      NodeSpec::Decision(1, "root", Moves{{"l", std::move(left)},
                                          {"r", std::move(right)}}));
}

Game BuildGame(std::string_view name, const GameParams& params) {
  if (name == "matching_pennies") return MatchingPennies();
  if (name == "kuhn_poker" || name == "kuhn") return KuhnPoker();
  if (name == "fig1_tradeoff") return Fig1Tradeoff();
  if (name == "fig2a_infoset_values") return Fig2aInfosetValues();
  if (name == "fig2b_prepare" || name == "fig2b") return Fig2bPrepare();
  if (name == "fig2c_LR" || name == "fig2c") return Fig2cLR();
  if (name == "fig4_left_oneplayer") return Fig4LeftOnePlayer();
  if (name == "thm3_chain") return Thm3Chain(params.n, params.range);
  if (name == "mdp_oneplayer") return MdpOnePlayer();
  if (name == "perfect_info_duel") return PerfectInfoDuel();
  throw EfgError(ErrorCode::kUnknownKey,
                 "unknown builtin game '" + std::string(name) + "'");
}

}  // namespace efgval
