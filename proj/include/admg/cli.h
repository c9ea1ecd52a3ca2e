// Copyright 2026 The admg-local Authors
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

#ifndef ADMG_CLI_H_
#define ADMG_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace admg::cli {

// Process exit codes.
inline constexpr int kExitSuccess = 0;
// Not m-separated, not derivable, or a rejected test.
inline constexpr int kExitFailure = 1;
// Unreadable or malformed input, bad flags, unmet preconditions.
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapacityError = 3;
// Internal, numeric or parameter-generation failure.
inline constexpr int kExitInternalError = 4;

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`. Returns the exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace admg::cli

#endif  // ADMG_CLI_H_
