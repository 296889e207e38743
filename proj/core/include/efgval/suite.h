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

#ifndef EFGVAL_SUITE_H_
#define EFGVAL_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace efgval {

inline constexpr int kNumCriteria = 10;

struct SuiteOptions {
  std::uint64_t seed = 1;
  int random_strategies = 100;
  int cfr_iterations = 100000;
  int cfrd_iterations = 100000;
  double epsilon = 1e-4;
  // Replaces convex combinations of value vectors by their first operand;
  // the convexity criterion must then fail.
  bool bypass_combiner = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // Measured quantities as "key=value" pairs, deterministic.
  std::vector<std::pair<std::string, std::string>> measurements;
  std::string note;
  double seconds = 0.0;      // wall time; not part of the report text
  double time_limit = 0.0;   // seconds
};

struct SuiteReport {
  std::vector<CriterionResult> results;

  bool passed() const;
  // One line per criterion; byte-identical for identical options.
  std::string Text() const;
};

// Runs one criterion (1..kNumCriteria). Criterion 10 reruns 1..9.
CriterionResult RunCriterion(int id, const SuiteOptions& options);
SuiteReport RunSuite(const SuiteOptions& options);

std::string FormatCriterion(const CriterionResult& result);

}  // namespace efgval

#endif  // EFGVAL_SUITE_H_
