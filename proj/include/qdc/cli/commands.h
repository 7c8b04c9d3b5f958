// Copyright 2026 The qdc Authors.
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

#ifndef QDC_CLI_COMMANDS_H_
#define QDC_CLI_COMMANDS_H_

#include <iosfwd>

namespace qdc::cli {

// Exit codes of the qde binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Parses argv and runs one subcommand (euler, qeuler, dcsum, verify,
// oracle), writing results to `out` and diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace qdc::cli

#endif  // QDC_CLI_COMMANDS_H_
