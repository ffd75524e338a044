// Copyright 2026 The smq Authors
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

#ifndef SMQ_TOOLS_CLI_HPP_
#define SMQ_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace smq::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInstance = 1;
inline constexpr int kUsage = 2;
inline constexpr int kUnstable = 3;
inline constexpr int kMalformedMarriage = 4;

// Runs one invocation. `args` excludes the program name. Machine output
// goes to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace smq::cli

#endif  // SMQ_TOOLS_CLI_HPP_
