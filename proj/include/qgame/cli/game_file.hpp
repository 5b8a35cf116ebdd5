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

#ifndef QGAME_CLI_GAME_FILE_HPP_
#define QGAME_CLI_GAME_FILE_HPP_

// .game files:
//
//   {"format_version": 1, "n1": 2, "n2": 2, "rho": [[...]],
//    "payoff_ops": {"I": [[...]], "II": [[...]]}}
//
// or, instead of payoff_ops, the referee's measurement
//
//   "measurement": {"povm": [[[...]], ...], "payoffs_I": [...],
//                   "payoffs_II": [...]}
//
// from which R^j = sum_k a^j_k M_k^dagger M_k is built. A .povm file holds
// the measurement object alone plus format_version.

#include <optional>
#include <vector>

#include "qgame/cli/json_io.hpp"
#include "qgame/game/quantum_game.hpp"
#include "qgame/quantum/checks.hpp"

namespace qgame::cli {

struct RawMeasurement {
  std::vector<ComplexMatrix> elements;
  std::vector<double> payoffs_i;
  std::vector<double> payoffs_ii;
};

// File contents before any physical validation.
struct RawGame {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  ComplexMatrix rho;
  std::optional<ComplexMatrix> payoff_op_i;
  std::optional<ComplexMatrix> payoff_op_ii;
  std::optional<RawMeasurement> measurement;
};

struct LoadedGame {
  game::QuantumGame game;
  std::optional<game::RefereeMeasurement> measurement;
};

RawMeasurement parse_measurement(const json& j, const std::string& where);
RawGame parse_game(const json& doc, const std::string& source);

// Every check cmd_validate reports, in order. Structural problems
// (dimension mismatches, payoff length) throw instead.
std::vector<quantum::ConditionCheck> game_checks(const RawGame& raw,
                                                 double tol);

game::RefereeMeasurement build_measurement(const RawMeasurement& raw,
                                           double tol);
LoadedGame build_game(const RawGame& raw, double tol);

LoadedGame load_game(const std::filesystem::path& path, double tol);
game::RefereeMeasurement load_measurement(const std::filesystem::path& path,
                                          double tol);

json measurement_to_json(const game::RefereeMeasurement& m);
json game_to_json(const game::QuantumGame& game);

}  // namespace qgame::cli

#endif  // QGAME_CLI_GAME_FILE_HPP_
