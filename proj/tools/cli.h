// Copyright 2026 The qmce Authors
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

#ifndef QMCE_TOOLS_CLI_H
#define QMCE_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace qmce::cli {

enum ExitCode : int {
  kSuccess = 0,
  kScenarioFailed = 1,
  kUsage = 2,
  kFormat = 3,
  kDimension = 4,
  kBudget = 5,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmce::cli

#endif  // QMCE_TOOLS_CLI_H
