// Copyright 2026 The QMSA Authors
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


#ifndef QMSA_CLI_HPP_
#define QMSA_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace qmsa {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitUsage = 2;

/// Commands: equiv {cp|wclt}, oracle, spectrum, moments.
/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

/// Comma-separated grid; throws std::invalid_argument unless strictly
/// increasing with every entry >= 2.
std::vector<int> parse_grid(const std::string& text);

}  // namespace qmsa

#endif  // QMSA_CLI_HPP_
