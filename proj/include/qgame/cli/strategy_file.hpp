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

#ifndef QGAME_CLI_STRATEGY_FILE_HPP_
#define QGAME_CLI_STRATEGY_FILE_HPP_

// .strategy files, one of
//
//   {"format_version": 1, "kind": "kraus", "operators": [[[...]], ...]}
//   {"format_version": 1, "kind": "chi", "chi": [[...]]}
//   {"format_version": 1, "kind": "unitary", "unitary": [[...]]}
//   {"format_version": 1, "kind": "classical", "index": 1}
//
// On the command line `classical:N` stands for the classical file with
// index N.

#include <optional>
#include <string>

#include "qgame/cli/json_io.hpp"
#include "qgame/quantum/chi.hpp"

namespace qgame::cli {

struct Strategy {
  std::string kind;
  quantum::ChiMatrix chi;
  // Present for every kind except chi.
  std::optional<quantum::KrausChannel> kraus;
};

// `n` is the operator dimension of the player using the strategy.
// Throws kParseError for malformed content and the usual validation kinds
// (kCompletenessViolation, kNotPositive, ...) for unphysical content;
// kDimensionMismatch when the strategy does not act on dimension n.
Strategy parse_strategy(const json& doc, std::size_t n, double tol,
                        const std::string& source);
Strategy load_strategy(const std::string& arg, std::size_t n, double tol);

json strategy_to_json(const quantum::ChiMatrix& chi);

}  // namespace qgame::cli

#endif  // QGAME_CLI_STRATEGY_FILE_HPP_
