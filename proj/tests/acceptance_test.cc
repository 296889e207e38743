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


// Runs the self-verification suite and prints one PASS/FAIL line per
// criterion, followed by its wall time. A criterion with a time limit fails
// when it runs over.

#include <cstdio>
#include <string>

#include "efgval/suite.h"

int main() {
  const efgval::SuiteOptions options;
  const efgval::SuiteReport report = efgval::RunSuite(options);
  bool all_passed = true;
  for (const efgval::CriterionResult& result : report.results) {
    const bool in_time =
        result.time_limit <= 0.0 || result.seconds <= result.time_limit;
    const bool passed = result.passed && in_time;
    all_passed = all_passed && passed;
    std::string line = efgval::FormatCriterion(result);
    if (result.passed && !in_time) {
      line.replace(line.find(": PASS"), 6, ": FAIL");
    }
    char timing[96];
    if (result.time_limit > 0.0) {
      std::snprintf(timing, sizeof(timing), " [%.2fs, limit %.0fs]",
                    result.seconds, result.time_limit);
    } else {
      std::snprintf(timing, sizeof(timing), " [%.2fs]", result.seconds);
    }
    std::printf("%s%s\n", line.c_str(), timing);
  }
  std::printf("overall: %s\n", all_passed ? "PASS" : "FAIL");
  return all_passed ? 0 : 1;
}
