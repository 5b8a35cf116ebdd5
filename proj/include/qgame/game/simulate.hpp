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

#ifndef QGAME_GAME_SIMULATE_HPP_
#define QGAME_GAME_SIMULATE_HPP_

#include <array>
#include <cstdint>

#include "qgame/game/quantum_game.hpp"
#include "qgame/quantum/kraus.hpp"
#include "qgame/rng.hpp"

namespace qgame::game {

struct SimulationResult {
  std::uint64_t rounds = 0;
  std::array<double, 2> mean{};            // indexed by player
  std::array<double, 2> standard_error{};  // sample stddev / sqrt(rounds)
  std::array<double, 2> exact{};           // tr(R^j pi)
};

// Plays `rounds` independent rounds: both channels act on rho, the referee
// samples an outcome of the measurement and pays out. Throws
// kInconsistentMeasurement when the measurement's payoff operators differ
// from the game's by more than 1e-9, and kUsageError for zero rounds.
SimulationResult simulate_play(const QuantumGame& game,
                               const RefereeMeasurement& measurement,
                               const quantum::KrausChannel& ch_i,
                               const quantum::KrausChannel& ch_ii,
                               std::uint64_t rounds, Rng& rng);

}  // namespace qgame::game

#endif  // QGAME_GAME_SIMULATE_HPP_
