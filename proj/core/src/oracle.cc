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

#include "efgval/oracle.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace efgval {
namespace {

constexpr double kEquilibriumTolerance = 1e-9;

std::vector<std::vector<int>> EnumeratePure(const Game& game, int player,
                                            int cap) {
  const auto& infosets = game.infosets(player);
  long long count = 1;
  for (const Infoset& infoset : infosets) {
    count *= infoset.num_actions();
    if (count > cap) {
      throw EfgError(ErrorCode::kCapExceeded,
                     "player " + std::to_string(player) +
                         " has more than " + std::to_string(cap) +
                         " pure strategies");
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> digits(infosets.size(), 0);
  for (long long k = 0; k < count; ++k) {
    out.push_back(digits);
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
      if (++digits[i] < infosets[i].num_actions()) break;
      digits[i] = 0;
    }
  }
  return out;
}

// Advances a sorted k-subset of {0..n-1} in lexicographic order.
bool NextCombination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Removes duplicate and weakly dominated rows (maximizer) and columns
// (minimizer) until nothing changes.
void Reduce(const Matrix& m, std::vector<int>& rows, std::vector<int>& cols) {
  bool changed = true;
  auto row_dominated = [&](int i, int k) {  // row i weakly below row k
    for (int j : cols) {
      if (m[i][j] > m[k][j]) return false;
    }
    return true;
  };
  auto col_dominated = [&](int j, int k) {  // column j weakly above k
    for (int i : rows) {
      if (m[i][j] < m[i][k]) return false;
    }
    return true;
  };
  while (changed) {
    changed = false;
    for (size_t a = 0; a < rows.size() && !changed; ++a) {
      for (size_t b = 0; b < rows.size() && !changed; ++b) {
        if (a == b) continue;
        const int i = rows[a];
        const int k = rows[b];
        // For identical rows keep the lower index.
        if (row_dominated(i, k) && (!row_dominated(k, i) || k < i)) {
          rows.erase(rows.begin() + a);
          changed = true;
        }
      }
    }
    for (size_t a = 0; a < cols.size() && !changed; ++a) {
      for (size_t b = 0; b < cols.size() && !changed; ++b) {
        if (a == b) continue;
        const int j = cols[a];
        const int k = cols[b];
        if (col_dominated(j, k) && (!col_dominated(k, j) || k < j)) {
          cols.erase(cols.begin() + a);
          changed = true;
        }
      }
    }
  }
}

// Solves [A^T -1; 1^T 0][x; v] = [0; 1] for the kernel A; returns false if
// singular.
bool SolveKernel(const Eigen::MatrixXd& a, Eigen::VectorXd& x, double& v) {
  const int k = static_cast<int>(a.rows());
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(k + 1, k + 1);
  system.topLeftCorner(k, k) = a.transpose();
  system.topRightCorner(k, 1).setConstant(-1.0);
  system.bottomLeftCorner(1, k).setConstant(1.0);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  if (!lu.isInvertible()) return false;
  const Eigen::VectorXd sol = lu.solve(rhs);
  if (!sol.allFinite()) return false;
  x = sol.head(k);
  v = sol(k);
  return true;
}

}  // namespace

NormalForm ToNormalForm(const Game& game, int cap) {
  NormalForm nf;
  for (int p = 1; p <= kNumPlayers; ++p) {
    nf.pure[p - 1] = EnumeratePure(game, p, cap);
  }
  const int n = game.num_nodes();
  std::vector<double> value(n, 0.0);
  nf.payoff.assign(nf.pure[0].size(),
                   std::vector<double>(nf.pure[1].size(), 0.0));
  for (size_t i = 0; i < nf.pure[0].size(); ++i) {
    for (size_t j = 0; j < nf.pure[1].size(); ++j) {
      for (NodeId h = n - 1; h >= 0; --h) {
        const Node& node = game.node(h);
        if (node.is_terminal()) {
          value[h] = node.utility;
        } else if (node.is_chance()) {
          double v = 0.0;
          for (int a = 0; a < node.num_actions(); ++a) {
            v += node.chance_probs[a] * value[node.children[a]];
          }
          value[h] = v;
        } else {
          const auto& pure = node.player == 1 ? nf.pure[0][i] : nf.pure[1][j];
          value[h] = value[node.children[pure[node.infoset_index]]];
        }
      }
      nf.payoff[i][j] = value[game.root()];
    }
  }
  return nf;
}

MatrixSolution SolveMatrixGame(const Matrix& payoff) {
  const int num_rows = static_cast<int>(payoff.size());
  const int num_cols = num_rows > 0 ? static_cast<int>(payoff[0].size()) : 0;
  if (num_rows == 0 || num_cols == 0) {
    throw EfgError(ErrorCode::kInvalidArgument, "empty payoff matrix");
  }
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& row : payoff) {
    if (static_cast<int>(row.size()) != num_cols) {
      throw EfgError(ErrorCode::kInvalidArgument, "ragged payoff matrix");
    }
    for (double x : row) lowest = std::min(lowest, x);
  }
  // Shifting makes every entry at least 1, so the value is positive and a
  // nonsingular kernel exists.
  const double shift = 1.0 - lowest;
  Matrix m = payoff;
  for (auto& row : m) {
    for (double& x : row) x += shift;
  }

  std::vector<int> rows(num_rows), cols(num_cols);
  for (int i = 0; i < num_rows; ++i) rows[i] = i;
  for (int j = 0; j < num_cols; ++j) cols[j] = j;
  Reduce(m, rows, cols);
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(cols.size());

  for (int k = 1; k <= std::min(r, c); ++k) {
    std::vector<int> rs(k);
    for (int a = 0; a < k; ++a) rs[a] = a;
    do {
      std::vector<int> cs(k);
      for (int a = 0; a < k; ++a) cs[a] = a;
      do {
        Eigen::MatrixXd a(k, k);
        for (int p = 0; p < k; ++p) {
          for (int q = 0; q < k; ++q) a(p, q) = m[rows[rs[p]]][cols[cs[q]]];
        }
        Eigen::VectorXd x, y;
        double vx = 0.0, vy = 0.0;
        if (!SolveKernel(a, x, vx)) continue;
        if (!SolveKernel(a.transpose(), y, vy)) continue;
        if (x.minCoeff() < -kEquilibriumTolerance ||
            y.minCoeff() < -kEquilibriumTolerance ||
            std::abs(vx - vy) > kEquilibriumTolerance) {
          continue;
        }
        MatrixSolution sol;
        sol.row.assign(num_rows, 0.0);
        sol.column.assign(num_cols, 0.0);
        for (int p = 0; p < k; ++p) {
          sol.row[rows[rs[p]]] = std::max(0.0, x(p));
          sol.column[cols[cs[p]]] = std::max(0.0, y(p));
        }
        // Verify against every pure strategy of the original matrix.
        bool ok = true;
        for (int j = 0; j < num_cols && ok; ++j) {
          double against = 0.0;
          for (int i = 0; i < num_rows; ++i) against += sol.row[i] * m[i][j];
          ok = against >= vx - kEquilibriumTolerance;
        }
        for (int i = 0; i < num_rows && ok; ++i) {
          double against = 0.0;
          for (int j = 0; j < num_cols; ++j) against += m[i][j] * sol.column[j];
          ok = against <= vx + kEquilibriumTolerance;
        }
        if (!ok) continue;
        sol.value = vx - shift;
        return sol;
      } while (NextCombination(cs, c));
    } while (NextCombination(rs, r));
  }
  throw EfgError(ErrorCode::kUnsupported,
                 "kernel enumeration exhausted without an equilibrium");
}

double GameValue(const Game& game, int cap) {
  return SolveMatrixGame(ToNormalForm(game, cap).payoff).value;
}

void MixtureToBehavioral(const Game& game, const NormalForm& normal_form,
                         int player, const std::vector<double>& mixture,
                         StrategyProfile& profile) {
  const auto& pure = normal_form.pure[player - 1];
  const auto& infosets = game.infosets(player);
  // Own action sequence leading to each infoset: (infoset, action) pairs.
  std::vector<std::vector<std::pair<int, int>>> sequence(infosets.size());
  for (size_t i = 0; i < infosets.size(); ++i) {
    NodeId v = infosets[i].members.front();
    while (game.node(v).parent != kNoNode) {
      const Node& parent = game.node(game.node(v).parent);
      if (parent.is_decision() && parent.player == player) {
        sequence[i].emplace_back(parent.infoset_index,
                                 game.node(v).parent_action);
      }
      v = game.node(v).parent;
    }
  }
  for (size_t i = 0; i < infosets.size(); ++i) {
    std::vector<double> weight(infosets[i].num_actions(), 0.0);
    double total = 0.0;
    for (size_t s = 0; s < pure.size(); ++s) {
      if (mixture[s] <= 0.0) continue;
      bool reaches = true;
      for (const auto& [infoset, action] : sequence[i]) {
        if (pure[s][infoset] != action) {
          reaches = false;
          break;
        }
      }
      if (!reaches) continue;
      weight[pure[s][i]] += mixture[s];
      total += mixture[s];
    }
    auto dist = profile.mutable_at(player, static_cast<int>(i));
    for (size_t a = 0; a < weight.size(); ++a) {
      dist[a] = total > 0.0 ? weight[a] / total : 1.0 / weight.size();
    }
  }
}

OracleEquilibrium SolveByNormalForm(const Game& game, int cap) {
  const NormalForm nf = ToNormalForm(game, cap);
  const MatrixSolution sol = SolveMatrixGame(nf.payoff);
  OracleEquilibrium out;
  out.profile = StrategyProfile::Uniform(game);
  MixtureToBehavioral(game, nf, 1, sol.row, out.profile);
  MixtureToBehavioral(game, nf, 2, sol.column, out.profile);
  out.value = sol.value;
  return out;
}

}  // namespace efgval
