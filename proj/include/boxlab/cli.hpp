// Copyright 2026 The boxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace boxlab {

/// Exit codes of the boxlab tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,           // unexpected failure
  kExitUsage = 2,           // bad flags, unreadable or unparsable input
  kExitRationalize = 3,     // no exact rationalization at the chosen bound
  kExitValidation = 4,      // box fails validation
};

/// Runs `boxlab <args...>` (args excludes the program name), writing to the
/// given streams. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxlab
