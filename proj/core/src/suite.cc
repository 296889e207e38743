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

#include "efgval/suite.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "efgval/cfr.h"
#include "efgval/games.h"
#include "efgval/oracle.h"
#include "efgval/range.h"
#include "efgval/reach.h"
#include "efgval/resolve.h"
#include "efgval/strategy.h"
#include "efgval/text_io.h"
#include "efgval/values.h"

namespace efgval {
namespace {

std::mt19937_64 CriterionRng(std::uint64_t seed, int criterion, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(criterion),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

std::vector<std::string> AllGameNames() {
  std::vector<std::string> names = CatalogNames();
  for (const auto& name : ExtraGameNames()) names.push_back(name);
  return names;
}

class Recorder {
 public:
  explicit Recorder(CriterionResult& result) : result_(result) {}
  void Add(const std::string& key, double value) {
    result_.measurements.emplace_back(key, FormatReport(value, 6));
  }
  void Add(const std::string& key, const std::string& value) {
    result_.measurements.emplace_back(key, value);
  }

 private:
  CriterionResult& result_;
};

int StateById(const Game& game, const std::string& id) {
  const int s = game.public_tree().Find(id);
  if (s < 0) {
    throw EfgError(ErrorCode::kUnknownKey, "no public state " + id);
  }
  return s;
}

ResolveOptions Resolve(const SuiteOptions& options) {
  ResolveOptions ro;
  ro.epsilon = options.epsilon;
  return ro;
}

// ---------------------------------------------------------------------------

void CfrConvergence(const SuiteOptions& options, CriterionResult& out) {
  Recorder rec(out);
  const Game kuhn = KuhnPoker();
  const double oracle = GameValue(kuhn);
  CfrOptions cfr;
  cfr.iterations = options.cfr_iterations;
  const CfrResult solved = SolveCfr(kuhn, cfr);
  const double expl = Exploitability(kuhn, solved.strategy);
  const double u = ExpectedUtility(kuhn, solved.strategy, 1);
  rec.Add("iterations", std::to_string(cfr.iterations));
  rec.Add("oracle_value", oracle);
  rec.Add("exploitability", expl);
  rec.Add("value_error", std::abs(u - oracle));
  out.passed = expl <= 1e-3 && std::abs(u - oracle) <= 1e-3;
}

void RangeRoundTrips(const SuiteOptions& options, CriterionResult& out) {
  Recorder rec(out);
  const RangeRepr base[] = {RangeRepr::kInfosetReachP1,
                            RangeRepr::kHistoryReachP1,
                            RangeRepr::kHistoryReachP1Chance};
  double round_trip = 0.0;
  double brute = 0.0;
  int bundles = 0;
  const auto names = AllGameNames();
  for (size_t gi = 0; gi < names.size(); ++gi) {
    const Game game = BuildGame(names[gi]);
    auto rng = CriterionRng(options.seed, 2, static_cast<int>(gi));
    const InfoPartition& p2 = game.augmented(2);
    for (int k = 0; k < options.random_strategies; ++k) {
      const StrategyProfile profile = StrategyProfile::Random(game, rng);
      const ReachTable reach(game, profile);
      for (int s = 0; s < game.public_tree().size(); ++s) {
        RangeBundle direct[3];
        for (int i = 0; i < 3; ++i) {
          direct[i] = RangeFromReach(game, reach, s, base[i]);
        }
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) {
            const RangeBundle there = ConvertRange(game, direct[i], base[j]);
            round_trip =
                std::max(round_trip, RangeDistance(there, direct[j]));
            const RangeBundle back = ConvertRange(game, there, base[i]);
            round_trip = std::max(round_trip, RangeDistance(back, direct[i]));
            ++bundles;
          }
        }
        // Counterfactual and conditional reach of player 2 from independent
        // root-to-history path walks.
        const RangeBundle cf =
            ConvertRange(game, direct[2], RangeRepr::kCounterfactualP2);
        const RangeBundle cond =
            ConvertRange(game, direct[2], RangeRepr::kConditionalP2);
        for (int set : StateSets(game, 2, s)) {
          double total = 0.0;
          std::vector<double> parts;
          for (NodeId h : p2.sets[set]) {
            const ReachTriple r = Reach(game, profile, h);
            parts.push_back(r.counterfactual[1]);
            total += r.counterfactual[1];
          }
          brute = std::max(brute, std::abs(cf.at(p2.keys[set]) - total));
          double cond_sum = 0.0;
          for (size_t m = 0; m < parts.size(); ++m) {
            const double got = cond.at(game.PathKey(p2.sets[set][m]));
            cond_sum += got;
            if (total > 0.0) {
              brute = std::max(brute, std::abs(got - parts[m] / total));
            }
          }
          brute = std::max(brute, std::abs(cond_sum - 1.0));
        }
      }
    }
  }
  rec.Add("games", std::to_string(names.size()));
  rec.Add("conversions", std::to_string(bundles));
  rec.Add("max_round_trip_error", round_trip);
  rec.Add("max_brute_force_error", brute);
  out.passed = round_trip <= 1e-12 && brute <= 1e-12;
}

void ValueAxioms(const SuiteOptions& options, CriterionResult& out) {
  Recorder rec(out);
  double worst = 0.0;
  int suites = 0;
  std::set<std::string> insensitive;
  const auto names = AllGameNames();
  for (size_t gi = 0; gi < names.size(); ++gi) {
    const Game game = BuildGame(names[gi]);
    auto rng = CriterionRng(options.seed, 3, static_cast<int>(gi));
    for (int k = 0; k < options.random_strategies; ++k) {
      const StrategyProfile profile = StrategyProfile::Random(game, rng);
      for (int p = 1; p <= kNumPlayers; ++p) {
        for (ValueKind kind :
             {ValueKind::kNormalized, ValueKind::kCounterfactual}) {
          const ValueVector v = InfosetValueVector(game, profile, p, kind);
          const AxiomReport report = CheckValueAxioms(game, profile, p, v);
          worst = std::max(worst, report.MaxResidual());
          ++suites;
          if (k != 0) continue;
          // Every check present must be sensitive to some +0.1 change.
          std::set<std::string> present, caught;
          for (const auto& e : report.entries) present.insert(e.check);
          for (int s = 0; s < v.size(); ++s) {
            ValueVector mutated = v;
            mutated.values[s] += 0.1;
            for (const auto& e :
                 CheckValueAxioms(game, profile, p, mutated).Violations()) {
              caught.insert(e.check);
            }
          }
          for (const auto& check : present) {
            if (!caught.count(check)) {
              insensitive.insert(names[gi] + ":" + check);
            }
          }
        }
      }
    }
  }
  std::string missed;
  for (const auto& m : insensitive) missed += (missed.empty() ? "" : ",") + m;
  rec.Add("suites", std::to_string(suites));
  rec.Add("max_residual", worst);
  rec.Add("insensitive_checks", missed.empty() ? "none" : missed);
  out.passed = worst <= 1e-9 && insensitive.empty();
}

void DepthLimitedSolving(const SuiteOptions& options, CriterionResult& out) {
  Recorder rec(out);
  out.passed = true;
  for (const char* name : {"kuhn_poker", "fig2b_prepare"}) {
    const Game game = BuildGame(name);
    const TrunkSpec trunk = TrunkSpec::FromDepth(game, 1);
    CfrdOptions cfrd;
    cfrd.iterations = options.cfrd_iterations;
    const CfrdResult solved =
        CfrdSolve(game, trunk, MakeExactOracle(Resolve(options)), cfrd);
    const StrategyProfile completed = CompleteTrunkProfile(
        game, trunk, solved.trunk_strategy, Resolve(options));
    const double expl = Exploitability(game, completed);
    const std::string prefix = std::string(name) + ".";
    rec.Add(prefix + "oracle_calls", std::to_string(solved.oracle_calls));
    rec.Add(prefix + "completed_exploitability", expl);
    out.passed = out.passed && expl <= 0.02;
  }
}

void ValueConvexity(const SuiteOptions& options, CriterionResult& out) {
  Recorder rec(out);
  const ResolveOptions ro = Resolve(options);
  // Bottom state: player 2's decision in the figure-1 game. Player 1's
  // sets there are singletons, so the valid vectors depend on how player 2
  // mixes, and every mix is an equilibrium of the gadget.
  const Game game = Fig1Tradeoff();
  const int state = StateById(game, "g1/a");
  StrategyProfile left = StrategyProfile::Uniform(game);
  StrategyProfile right = left;
  SetPureByLabel(game, left, "2:H", "c");
  SetPureByLabel(game, right, "2:H", "d");
  auto vector_of = [&](const StrategyProfile& sigma) {
    SubgameSolution sol;
    sol.state = state;
    sol.strategy = sigma;
    for (int p = 1; p <= kNumPlayers; ++p) {
      sol.nu[p - 1] = CbrValuesAtState(game, sigma, p, state);
    }
    return sol;
  };
  auto residual_of = [&](const SubgameSolution& sol,
                         const StrategyProfile& sigma) {
    VerifyOptions verify;
    verify.sigma = &sigma;
    verify.resolve = ro;
    return VerifyValueVector(
               game, RangeAt(game, sigma, state, RangeRepr::kSeparated),
               sol.nu, verify)
        .residual;
  };
  const SubgameSolution a = vector_of(left);
  const SubgameSolution b = vector_of(right);
  const double input_residual =
      std::max(residual_of(a, left), residual_of(b, right));
  const double distance = MaxAbsDifference(a.nu[0], b.nu[0]);
  rec.Add("input_residual", input_residual);
  rec.Add("vector_distance", distance);
  out.passed = input_residual <= options.epsilon && distance >= 0.1;
  for (double lambda : {0.25, 0.5, 0.75}) {
    const SubgameSolution combined =
        options.bypass_combiner ? a : ConvexCombine(a, b, lambda);
    const StrategyProfile witness = MixRealization(game, left, right, lambda);
    VerifyOptions verify;
    verify.sigma = &witness;
    verify.constructive = true;
    verify.cfrd.iterations = options.cfrd_iterations;
    verify.resolve = ro;
    const VerificationReport report = VerifyValueVector(
        game, RangeAt(game, witness, state, RangeRepr::kSeparated),
        combined.nu, verify);
    const std::string prefix = "lambda" + FormatDouble(lambda) + ".";
    rec.Add(prefix + "residual", report.residual);
    rec.Add(prefix + "completed_exploitability",
            *report.constructive_exploitability);
    out.passed = out.passed && report.residual <= input_residual + 1e-3 &&
                 *report.constructive_exploitability <= 0.02;
  }
}

void InfosetValueInvariance(const SuiteOptions& options, CriterionResult& out) {
  Recorder rec(out);
  out.passed = true;
  const Game game = Fig1Tradeoff();
  const int state = StateById(game, "g1");
  // Two candidates per player that share the opponent's strategy.
  struct Pair {
    int player;
    const char* infoset;
    const char* first;
    const char* second;
  };
  for (const Pair& pair : {Pair{1, "1:I", "a", "b"}, Pair{2, "2:H", "c", "d"}}) {
    StrategyProfile x = StrategyProfile::Uniform(game);
    StrategyProfile y = x;
    SetPureByLabel(game, x, pair.infoset, pair.first);
    SetPureByLabel(game, y, pair.infoset, pair.second);
    const CrosResult cx = EvaluateCandidate(game, state, x);
    const CrosResult cy = EvaluateCandidate(game, state, y);
    const int p = pair.player - 1;
    const double candidate_residual =
        std::max({cx.gadget_exploitability, cx.normalized_cbr_gap,
                  cy.gadget_exploitability, cy.normalized_cbr_gap});
    const double infoset_gap =
        std::max(MaxAbsDifference(cx.infoset_values[p], cy.infoset_values[p]),
                 MaxAbsDifference(cx.infoset_cf_values[p],
                                  cy.infoset_cf_values[p]));
    const double history_gap =
        MaxAbsDifference(cx.history_values[p], cy.history_values[p]);
    const std::string prefix = "p" + std::to_string(pair.player) + ".";
    rec.Add(prefix + "candidate_residual", candidate_residual);
    rec.Add(prefix + "infoset_value_gap", infoset_gap);
    rec.Add(prefix + "history_value_gap", history_gap);
    out.passed = out.passed && candidate_residual <= options.epsilon &&
                 infoset_gap <= 2 * options.epsilon && history_gap >= 0.1;
  }
  const Game left = Fig4LeftOnePlayer();
  const int set = left.augmented(1).set_of[left.infoset(1, 0).members.front()];
  double worst = 0.0;
  auto rng = CriterionRng(options.seed, 6, 0);
  std::vector<StrategyProfile> profiles;
  for (const char* action : {"L", "R"}) {
    StrategyProfile pure = StrategyProfile::Uniform(left);
    SetPureByLabel(left, pure, "1:I", action);
    profiles.push_back(pure);
  }
  for (int k = 0; k < options.random_strategies; ++k) {
    profiles.push_back(StrategyProfile::Random(left, rng));
  }
  for (const auto& sigma : profiles) {
    worst = std::max(worst,
                     std::abs(CfInfosetValue(left, sigma, 1, set) - 0.5));
  }
  rec.Add("fig4_cf_value_error", worst);
  out.passed = out.passed && worst <= 1e-12;
}

void RefinedValues(const SuiteOptions& options, CriterionResult& out) {
  Recorder rec(out);
  const ResolveOptions ro = Resolve(options);
  const Game game = Fig2cLR();
  const int state = StateById(game, "L");
  const RangeBundle range = JointRange(game, state, {1.0, 0.0});
  const SubgameSolution exact = ExactSubgameSolve(game, range, nullptr, ro);
  const double v_left = exact.nu[0].at("1@L");
  const double v_right = exact.nu[0].at("1@R");
  rec.Add("value_L", v_left);
  rec.Add("value_R", v_right);

  VerifyOptions verify;
  verify.resolve = ro;
  const VerificationReport own =
      VerifyValueVector(game, range, exact.nu, verify);
  rec.Add("exact_vector_residual", own.residual);

  StrategyProfile lb = StrategyProfile::Uniform(game);
  SetPureByLabel(game, lb, "1:root", "L");
  SetPureByLabel(game, lb, "2:X", "B");
  ValueVector lb_values[kNumPlayers];
  for (int p = 1; p <= kNumPlayers; ++p) {
    lb_values[p - 1] = CbrValuesAtState(game, lb, p, state);
  }
  rec.Add("LB_gadget_exploitability", GadgetExploitability(game, range, lb));
  const VerificationReport rejected =
      VerifyValueVector(game, range, lb_values, verify);
  rec.Add("LB_cbr_gap", rejected.cbr_gap);
  rec.Add("LB_worst_set", rejected.worst_set);
  out.passed = std::abs(v_left - 1.0) <= 1e-3 && std::abs(v_right) <= 1e-3 &&
               own.residual <= 2 * options.epsilon &&
               rejected.cbr_gap >= 0.5;
}

void HistoryValueGap(const SuiteOptions& options, CriterionResult& out) {
  Recorder rec(out);
  const ResolveOptions ro = Resolve(options);
  double value[2];
  const std::vector<double> ranges[2] = {{0.3, 0.4, 0.3}, {0.3, 0.4, 0.0}};
  for (int i = 0; i < 2; ++i) {
    const Game game = Thm3Chain(2, ranges[i]);
    const int state = StateById(game, "h0/d");
    const CrosResult cros =
        CrosApproximate(game, state, StrategyProfile::Uniform(game), ro);
    value[i] = cros.history_values[0].at("h0/d");
    const std::string prefix = i == 0 ? "mixed." : "zeroed.";
    rec.Add(prefix + "v1_h0", value[i]);
    rec.Add(prefix + "gadget_exploitability", cros.gadget_exploitability);
  }
  out.passed = std::abs(value[0] - 0.5) >= 0.05 &&
               std::abs(value[1] - 0.5) <= 2 * options.epsilon;
}

void TrunkDependence(const SuiteOptions& options, CriterionResult& out) {
  Recorder rec(out);
  const ResolveOptions ro = Resolve(options);
  const Game game = Fig2bPrepare();
  const int state = StateById(game, "PfA/A");
  StrategyProfile prepare_a = StrategyProfile::Uniform(game);
  StrategyProfile prepare_b = prepare_a;
  SetPureByLabel(game, prepare_a, "2:prepare", "PfA");
  SetPureByLabel(game, prepare_b, "2:prepare", "PfB");
  const RangeBundle range_a =
      RangeAt(game, prepare_a, state, RangeRepr::kSeparated);
  const RangeBundle range_b =
      RangeAt(game, prepare_b, state, RangeRepr::kSeparated);
  const SubgameSolution solved =
      ExactSubgameSolve(game, range_a, &prepare_a, ro);
  VerifyOptions verify;
  verify.resolve = ro;
  verify.trunk = &prepare_a;
  const double own = VerifyValueVector(game, range_a, solved.nu, verify).residual;
  verify.trunk = &prepare_b;
  const VerificationReport other =
      VerifyValueVector(game, range_b, solved.nu, verify);
  rec.Add("own_trunk_residual", own);
  rec.Add("other_trunk_residual", other.residual);
  rec.Add("other_worst_set", other.worst_set);
  out.passed = own <= 2 * options.epsilon && other.residual >= 0.1;
}

const char* kNames[kNumCriteria] = {
    "cfr_convergence",       "range_round_trips",   "value_axioms",
    "depth_limited_solving", "value_convexity",     "infoset_value_invariance",
    "refined_values",        "history_value_gap",   "trunk_dependence",
    "determinism",
};

const double kTimeLimits[kNumCriteria] = {60, 30, 60, 300, 0, 0, 0, 0, 0, 0};

std::string PartialText(const SuiteOptions& options) {
  SuiteReport report;
  for (int id = 1; id < kNumCriteria; ++id) {
    report.results.push_back(RunCriterion(id, options));
  }
  return report.Text();
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

std::string FormatCriterion(const CriterionResult& result) {
  std::ostringstream line;
  line << "criterion " << result.id << ' ' << result.name << ": "
       << (result.passed ? "PASS" : "FAIL");
  for (const auto& [key, value] : result.measurements) {
    line << ' ' << key << '=' << value;
  }
  if (!result.note.empty()) line << " (" << result.note << ')';
  return line.str();
}

std::string SuiteReport::Text() const {
  std::string text;
  for (const auto& result : results) text += FormatCriterion(result) + '\n';
  text += std::string("overall: ") + (passed() ? "PASS" : "FAIL") + '\n';
  return text;
}

CriterionResult RunCriterion(int id, const SuiteOptions& options) {
  if (id < 1 || id > kNumCriteria) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "criterion ids run from 1 to " +
                       std::to_string(kNumCriteria));
  }
  CriterionResult out;
  out.id = id;
  out.name = kNames[id - 1];
  out.time_limit = kTimeLimits[id - 1];
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1:
        CfrConvergence(options, out);
        break;
      case 2:
        RangeRoundTrips(options, out);
        break;
      case 3:
        ValueAxioms(options, out);
        break;
      case 4:
        DepthLimitedSolving(options, out);
        break;
      case 5:
        ValueConvexity(options, out);
        break;
      case 6:
        InfosetValueInvariance(options, out);
        break;
      case 7:
        RefinedValues(options, out);
        break;
      case 8:
        HistoryValueGap(options, out);
        break;
      case 9:
        TrunkDependence(options, out);
        break;
      case 10: {
        const std::string first = PartialText(options);
        const std::string second = PartialText(options);
        out.passed = first == second;
        out.measurements.emplace_back("report_bytes",
                                      std::to_string(first.size()));
        break;
      }
    }
  } catch (const EfgError& e) {
    out.passed = false;
    out.note = std::string("error: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

SuiteReport RunSuite(const SuiteOptions& options) {
  SuiteReport report;
  for (int id = 1; id < kNumCriteria; ++id) {
    report.results.push_back(RunCriterion(id, options));
  }
  // Determinism: a second pass must reproduce the first byte for byte.
  CriterionResult determinism;
  determinism.id = kNumCriteria;
  determinism.name = kNames[kNumCriteria - 1];
  const auto start = std::chrono::steady_clock::now();
  const std::string first = report.Text();
  const std::string second = PartialText(options);
  determinism.passed = first == second;
  determinism.measurements.emplace_back("report_bytes",
                                        std::to_string(first.size()));
  determinism.seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  report.results.push_back(determinism);
  return report;
}

}  // namespace efgval
