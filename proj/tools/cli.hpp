// Copyright 2026 The stabdet Authors
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

#ifndef STABDET_TOOLS_CLI_HPP_
#define STABDET_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace stabdet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  // parse, configuration or input errors
inline constexpr int kExitInconsistent = 3;
inline constexpr int kExitUnderdetermined = 4;

/// Runs one command. `args` excludes the program name. Normal output goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabdet::cli

#endif  // STABDET_TOOLS_CLI_HPP_
