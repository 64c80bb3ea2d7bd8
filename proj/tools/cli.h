// Copyright 2026 The Gridflow Authors.
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

#ifndef GRIDFLOW_TOOLS_CLI_H_
#define GRIDFLOW_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gridflow::cli {

// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitInfeasible = 3,
  kExitUnsupported = 4,
  kExitTooLarge = 5,
  kExitVerifyFailed = 6,
  kExitInternal = 7,
};

// Runs one command. `args` excludes the program name. Reports go to `out`
// (or to --output), the human summary and diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gridflow::cli

#endif  // GRIDFLOW_TOOLS_CLI_H_
