// Copyright 2026 The LambdaCC Authors
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

#pragma once

#include <iosfwd>

namespace lambdacc::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,      // bad flag, lambda, epsilon or regime
  kExitInput = 3,      // unreadable or malformed input file
  kExitSize = 4,       // an exact engine cap was exceeded
  kExitNumerical = 5,  // solver breakdown or MWU non-convergence
};

// Default directory for relative --output paths.
inline constexpr const char* kOutputDirEnv = "LAMBDACC_OUTPUT_DIR";

// Entry point of the `lambdacc` tool. Reports go to `out` unless --output
// is given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lambdacc::cli
