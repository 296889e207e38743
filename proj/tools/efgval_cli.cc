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

// Command-line front end: solving, value evaluation, resolving datasets,
// game export and the self-verification suite.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "efgval/cfr.h"
#include "efgval/game.h"
#include "efgval/game_format.h"
#include "efgval/games.h"
#include "efgval/range.h"
#include "efgval/resolve.h"
#include "efgval/strategy.h"
#include "efgval/suite.h"
#include "efgval/text_io.h"
#include "efgval/values.h"

namespace efgval {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct GameSource {
  std::string name;
  std::string file;
  int n = 2;
  std::string weights;

  void Register(CLI::App* app) {
    app->add_option("--game", name, "builtin game name");
    app->add_option("--game-file", file, "game-format document");
    app->add_option("--n", n, "thm3_chain block count")->check(
        CLI::PositiveNumber);
    app->add_option("--weights", weights,
                    "thm3_chain chance weights, comma separated");
  }

  Game Load() const {
    if (name.empty() == file.empty()) {
      throw EfgError(ErrorCode::kInvalidArgument,
                     "give exactly one of --game and --game-file");
    }
    if (!file.empty()) return LoadGameFile(file);
    GameParams params;
    params.n = n;
    if (!weights.empty()) {
      for (const auto& w : SplitString(weights, ',')) {
        params.range.push_back(ParseDouble(w));
      }
    }
    return BuildGame(name, params);
  }
};

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteFile(path, text);
  }
}

int PublicStateIndex(const Game& game, const std::string& id) {
  const int state = game.public_tree().Find(id);
  if (state < 0) {
    throw EfgError(ErrorCode::kUnknownKey, "unknown public state '" + id + "'");
  }
  return state;
}

// ---------------------------------------------------------------------------

struct SolveConfig {
  GameSource game;
  std::string algo = "cfr";
  int iterations = 1000;
  double tolerance = 1e-4;
  int trunk_depth = 1;
  std::string out;
  std::string trace_out;
};

int RunSolve(const SolveConfig& config) {
  const Game game = config.game.Load();
  StrategyProfile strategy;
  CfrDiagnostics diagnostics;
  double exploitability = 0.0;
  if (config.algo == "cfr") {
    CfrOptions options;
    options.iterations = config.iterations;
    CfrResult result = SolveCfr(game, options);
    strategy = std::move(result.strategy);
    diagnostics = std::move(result.diagnostics);
    exploitability = diagnostics.final_exploitability;
  } else if (config.algo == "cfrd") {
    ResolveOptions resolve;
    resolve.epsilon = config.tolerance;
    const TrunkSpec trunk = TrunkSpec::FromDepth(game, config.trunk_depth);
    CfrdOptions options;
    options.iterations = config.iterations;
    CfrdResult result =
        CfrdSolve(game, trunk, MakeExactOracle(resolve), options);
    strategy =
        CompleteTrunkProfile(game, trunk, result.trunk_strategy, resolve);
    diagnostics = std::move(result.diagnostics);
    exploitability = Exploitability(game, strategy);
    std::cerr << "bottom states: " << trunk.bottom_states.size()
              << ", oracle calls: " << result.oracle_calls << '\n';
  } else {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "unknown algorithm '" + config.algo + "'");
  }
  if (!config.out.empty()) WriteFile(config.out, WriteStrategy(game, strategy));
  if (!config.trace_out.empty()) {
    WriteFile(config.trace_out, WriteDiagnostics(diagnostics));
  }
  if (config.out.empty()) std::cout << WriteStrategy(game, strategy);
  std::cout << "final exploitability: " << FormatReport(exploitability)
            << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ValuesConfig {
  GameSource game;
  std::string public_state;
  std::string range;
  std::string range_file;
  std::string strategy_file;
  double tolerance = 1e-4;
  std::string out;
};

int RunValues(const ValuesConfig& config) {
  const Game game = config.game.Load();
  const int state = PublicStateIndex(game, config.public_state);
  const int sources = !config.range.empty() + !config.range_file.empty() +
                      !config.strategy_file.empty();
  if (sources > 1) {
    throw EfgError(ErrorCode::kInvalidArgument,
                   "give at most one of --range, --range-file and "
                   "--strategy-file");
  }
  StrategyProfile trunk = StrategyProfile::Uniform(game);
  if (!config.strategy_file.empty()) {
    trunk = ReadStrategy(game, ReadFile(config.strategy_file));
  } else if (!config.range.empty() || !config.range_file.empty()) {
    RangeBundle range;
    if (!config.range.empty()) {
      std::vector<double> masses;
      for (const auto& m : SplitString(config.range, ',')) {
        masses.push_back(ParseDouble(m));
      }
      range = JointRange(game, state, masses);
    } else {
      range = ReadRange(game, ReadFile(config.range_file));
      if (range.state != state) {
        throw EfgError(ErrorCode::kInvalidArgument,
                       "range file is for a different public state");
      }
    }
    trunk = SynthesizeTrunk(game, range);
  }
  ResolveOptions resolve;
  resolve.epsilon = config.tolerance;
  const CrosResult cros = CrosApproximate(game, state, trunk, resolve);
  std::ostringstream text;
  text << "# game\t" << game.name() << '\n';
  text << "# public_state\t" << game.public_tree().states[state].id << '\n';
  text << "# gadget_exploitability\t" << FormatDouble(cros.gadget_exploitability)
       << '\n';
  text << "# cbr_gap\t" << FormatDouble(cros.cbr_gap) << '\n';
  text << "# normalized_cbr_gap\t" << FormatDouble(cros.normalized_cbr_gap)
       << '\n';
  text << "# range_error\t" << FormatDouble(cros.range_error) << '\n';
  for (int p = 0; p < kNumPlayers; ++p) {
    text << WriteValueVector(cros.infoset_values[p])
         << WriteValueVector(cros.infoset_cf_values[p])
         << WriteValueVector(cros.history_values[p])
         << WriteValueVector(cros.history_cf_values[p]);
  }
  Emit(config.out, text.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct DatasetConfig {
  GameSource game;
  std::string public_state;
  int samples = 10;
  std::uint64_t seed = 1;
  double tolerance = 1e-4;
  std::string out;
};

int RunDumpDataset(const DatasetConfig& config) {
  const Game game = config.game.Load();
  const int state = PublicStateIndex(game, config.public_state);
  ResolveOptions resolve;
  resolve.epsilon = config.tolerance;
  Emit(config.out,
       DumpDataset(game, state, config.samples, config.seed, resolve));
  return kExitOk;
}

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::string out;
};

int RunVerifyPaper(const VerifyConfig& config) {
  SuiteOptions options;
  options.seed = config.seed;
  const SuiteReport report = RunSuite(options);
  const std::string text = report.Text();
  if (!config.out.empty()) WriteFile(config.out, text);
  std::cout << text;
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

struct ExportConfig {
  GameSource game;
  std::string out;
};

int RunExport(const ExportConfig& config) {
  Emit(config.out, SerializeGame(config.game.Load()));
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Extensive-form game solving and value-function tools"};
  app.require_subcommand(1);

  SolveConfig solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run CFR or CFR-D");
  solve.game.Register(solve_cmd);
  solve_cmd->add_option("--algo", solve.algo, "cfr or cfrd")
      ->check(CLI::IsMember({"cfr", "cfrd"}));
  solve_cmd->add_option("--iters", solve.iterations, "iterations")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--tol", solve.tolerance, "resolving tolerance")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--trunk-depth", solve.trunk_depth,
                        "public-tree depth of the CFR-D bottom states")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--out", solve.out, "strategy file");
  solve_cmd->add_option("--trace-out", solve.trace_out,
                        "(iteration, exploitability) trace file");

  ValuesConfig values;
  CLI::App* values_cmd =
      app.add_subcommand("values", "optimal value function at a public state");
  values.game.Register(values_cmd);
  values_cmd->add_option("--public-state", values.public_state, "state id")
      ->required();
  values_cmd->add_option("--range", values.range,
                         "joint range, comma separated in member order");
  values_cmd->add_option("--range-file", values.range_file, "range file");
  values_cmd->add_option("--strategy-file", values.strategy_file,
                         "trunk strategy whose range is used");
  values_cmd->add_option("--tol", values.tolerance, "resolving tolerance")
      ->check(CLI::PositiveNumber);
  values_cmd->add_option("--out", values.out, "output file");

  DatasetConfig dataset;
  CLI::App* dataset_cmd = app.add_subcommand(
      "dump-dataset", "ranges and resolved values for random trunks");
  dataset.game.Register(dataset_cmd);
  dataset_cmd->add_option("--public-state", dataset.public_state, "state id")
      ->required();
  dataset_cmd->add_option("--samples", dataset.samples, "row count")
      ->check(CLI::NonNegativeNumber);
  dataset_cmd->add_option("--seed", dataset.seed, "random seed");
  dataset_cmd->add_option("--tol", dataset.tolerance, "resolving tolerance")
      ->check(CLI::PositiveNumber);
  dataset_cmd->add_option("--out", dataset.out, "output file");

  VerifyConfig verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "run the self-verification suite");
  verify_cmd->add_option("--seed", verify.seed, "random seed");
  verify_cmd->add_option("--out", verify.out, "report file");

  ExportConfig export_config;
  CLI::App* export_cmd =
      app.add_subcommand("export", "write a game as a game-format document");
  export_config.game.Register(export_cmd);
  export_cmd->add_option("--out", export_config.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*values_cmd) return RunValues(values);
    if (*dataset_cmd) return RunDumpDataset(dataset);
    if (*verify_cmd) return RunVerifyPaper(verify);
    if (*export_cmd) return RunExport(export_config);
  } catch (const EfgError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace efgval

int main(int argc, char** argv) { return efgval::Main(argc, argv); }
