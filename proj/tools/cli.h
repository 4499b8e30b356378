// Copyright 2026 The graphsens Authors
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

// Command-line front end: compute, verify, sweep, export-dot and graph6.

#ifndef GRAPHSENS_TOOLS_CLI_H_
#define GRAPHSENS_TOOLS_CLI_H_

#include <iosfwd>

namespace graphsens::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line. `in` feeds the graph6 subcommand.
int RunCli(int argc, const char* const* argv, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace graphsens::cli

#endif  // GRAPHSENS_TOOLS_CLI_H_
