// Copyright 2026 The nsgroup Authors
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

#ifndef NSGROUP_CLI_COMMANDS_HPP_
#define NSGROUP_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace nsgroup::cli {

// Exit codes. A mathematically negative answer (NS fails, a group is not
// perfect) is still kOk.
inline constexpr int kOk = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kBadInput = 2;

// Runs one invocation. `args` excludes the program name.
//
// Subcommands: ns-check G1 G2, classify G1 G2, normals G, factors G,
// leinster-check G1 G2, perfect G, paper-examples.
// Flags: --json, --cap N, --no-timing, --seedless-deterministic.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace nsgroup::cli

#endif  // NSGROUP_CLI_COMMANDS_HPP_
