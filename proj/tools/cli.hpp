// Copyright 2026 The macsvt Authors
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

/**
 * @file
 * @brief Command-line front end, callable in-process for testing.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macsvt::cli {

  enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_budget = 2, exit_verify_failed = 3, exit_internal = 4 };

  /// Runs the tool with args[0] as the program name; documents go to out, diagnostics to err.
  int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace macsvt::cli
