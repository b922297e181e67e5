// Copyright 2026 The readacuity Authors. All Rights Reserved.
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

#ifndef READACUITY_CLI_COMMANDS_HPP_
#define READACUITY_CLI_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace readacuity::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `readacuity` tool. `args` excludes the program name.
// Subcommands: analyze, calibrate, schedule, ssq-score, fit-curves.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace readacuity::cli

#endif  // READACUITY_CLI_COMMANDS_HPP_
