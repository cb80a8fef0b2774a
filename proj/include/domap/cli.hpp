// Copyright 2026 The domap Authors
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

#ifndef DOMAP_CLI_HPP_
#define DOMAP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace domap {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;        // success, or "exists"
inline constexpr int kExitNegative = 1;  // a valid run with a negative verdict
inline constexpr int kExitError = 2;     // usage, parse or resource error

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domap

#endif  // DOMAP_CLI_HPP_
