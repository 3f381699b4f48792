// Copyright 2026 The coemap Authors.
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

// Subcommands of the coemap tool. Exit codes: 0 success, 1 input validation
// or I/O failure, 2 usage or configuration error. Standard output carries
// key=value summaries only; progress and warnings go to standard error.

#ifndef COEMAP_CLI_COMMANDS_HPP_
#define COEMAP_CLI_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace coemap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char *kToolVersion = "0.1.0";

// Parses argv (argv[0] is the program name) and dispatches to run, validate
// or synth.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

}  // namespace coemap::cli

#endif  // COEMAP_CLI_COMMANDS_HPP_
