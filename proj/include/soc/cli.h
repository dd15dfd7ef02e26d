// Copyright 2026 The soc Authors.
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

#ifndef SOC_CLI_H_
#define SOC_CLI_H_

#include <ostream>

namespace soc::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kMismatch = 3,
  kClaimFailed = 4,
};

// Entry point of the `soc` tool; writes reports to `out` and diagnostics to
// `err` and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace soc::cli

#endif  // SOC_CLI_H_
