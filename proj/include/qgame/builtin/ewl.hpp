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

#ifndef QGAME_BUILTIN_EWL_HPP_
#define QGAME_BUILTIN_EWL_HPP_

// The quantized prisoner's dilemma of Eisert, Wilkens and Lewenstein.
//
// The referee prepares rho = |psi><psi| with psi = (|00> + i|11>) / sqrt(2),
// i.e. J|00> for J = (I + i X(x)X) / sqrt(2). It measures with
// M_k = |k><k| J^dagger and pays (3,3), (0,5), (5,0), (1,1) for outcomes
// 00, 01, 10, 11, which gives
//
//   R^I  = [[2, 0, 0, -i], [0, 5/2, 5i/2, 0], [0, -5i/2, 5/2, 0], [i, 0, 0, 2]]
//   R^II = R^I with the inner 5i/2 entries negated.

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgame/builtin/fixture.hpp"
#include "qgame/game/quantum_game.hpp"
#include "qgame/quantum/chi.hpp"

namespace qgame::builtin {

struct NamedGame {
  std::string name;
  game::QuantumGame game;
  std::optional<game::RefereeMeasurement> measurement;
  std::vector<std::pair<std::string, quantum::ChiMatrix>> reference_strategies;
  std::optional<std::pair<game::PayoffTensor, game::PayoffTensor>>
      reference_tensors;
};

struct EquilibriumStrategies {
  quantum::ChiMatrix chi_star;  // player I: chi_(00)(00) = chi_(01)(01) = 1
  quantum::ChiMatrix xi_star;   // player II: xi_(10)(10) = xi_(11)(11) = 1
};

quantum::DensityMatrix ewl_initial_state();
linalg::ComplexMatrix ewl_payoff_operator(game::Player player);
game::RefereeMeasurement ewl_measurement();

// Reference strategies: chi_star, xi_star, identity and bit_flip. The
// reference tensors are attached when `fixture_dir` is given.
NamedGame ewl_prisoners_dilemma(
    const std::optional<std::filesystem::path>& fixture_dir = std::nullopt);

EquilibriumStrategies ewl_equilibrium_strategies();

}  // namespace qgame::builtin

#endif  // QGAME_BUILTIN_EWL_HPP_
