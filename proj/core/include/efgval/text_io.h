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

#ifndef EFGVAL_TEXT_IO_H_
#define EFGVAL_TEXT_IO_H_

#include <string>
#include <string_view>
#include <vector>

namespace efgval {

// Shortest decimal text that reads back to the same double.
std::string FormatDouble(double value);
// Fixed number of significant digits, for human-facing reports.
std::string FormatReport(double value, int digits = 10);

double ParseDouble(std::string_view text);

std::vector<std::string> SplitString(std::string_view text, char delim);
// Non-empty lines that do not start with '#'.
std::vector<std::string> DataLines(std::string_view text);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace efgval

#endif  // EFGVAL_TEXT_IO_H_
