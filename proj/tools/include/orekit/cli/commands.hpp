// Copyright 2026 The orekit Authors.
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

#ifndef OREKIT_CLI_COMMANDS_HPP
#define OREKIT_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace orekit::cli {

enum ExitCode : int {
  kOk = 0,
  /// Usage errors and unmet operation preconditions.
  kFailure = 1,
  /// Schema violations, invalid construction data, twist law failures.
  kValidation = 2,
  kGuard = 3,
  kParse = 4,
};

/// Runs one invocation; args excludes the program name. Reports go to `out`, diagnostics to
/// `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orekit::cli

#endif  // OREKIT_CLI_COMMANDS_HPP
