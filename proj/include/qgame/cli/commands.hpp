// Copyright 2026 The QGame Authors
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

#ifndef QGAME_CLI_COMMANDS_HPP_
#define QGAME_CLI_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "qgame/errors.hpp"

namespace qgame::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCrossCheck = 3;
inline constexpr int kExitNoConvergence = 4;

int exit_code_for(ErrorKind kind);

// Seed used by `simulate` when --seed is absent.
inline constexpr unsigned long long kDefaultSeed = 20260101;

// Runs one command; `args` excludes the program name. Everything is
// written to `out` and `err`, so tests can drive the CLI in-process.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qgame::cli

#endif  // QGAME_CLI_COMMANDS_HPP_
