/*
 * Copyright 2026 The Area Graph Localization Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef AREAGRAPH_TOOLS_CLI_COMMANDS_H_
#define AREAGRAPH_TOOLS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

#include "areagraph/common/error.h"

namespace areagraph {
namespace cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // Bad flags, config or input data.
inline constexpr int kExitAlgorithm = 2;   // Divergence, pose or prior off the map.
inline constexpr int kExitIo = 3;

int ExitCodeFor(ErrorCode code);

// One line on 'err': error code=<name> exit=<n> message="<text>".
void PrintErrorLine(std::ostream& err, ErrorCode code, const std::string& message);

// Parses the arguments (args[0] is the program name), runs the subcommand
// and returns the exit code. Results go to 'out', progress and errors to
// 'err'.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace areagraph

#endif  // AREAGRAPH_TOOLS_CLI_COMMANDS_H_
