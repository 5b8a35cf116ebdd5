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

#include "qgame/builtin/ewl.hpp"

#include <cmath>

#include "qgame/game/classical.hpp"
#include "qgame/quantum/kraus.hpp"

namespace qgame::builtin {

using linalg::ComplexMatrix;
using linalg::cplx;

namespace {

constexpr cplx kI(0.0, 1.0);

quantum::ChiMatrix diagonal_chi(std::size_t first, std::size_t second) {
  ComplexMatrix m = ComplexMatrix::zeros(4);
  m(first, first) = 1.0;
  m(second, second) = 1.0;
  return quantum::validate_chi(m, 2);
}

}  // namespace

quantum::DensityMatrix ewl_initial_state() {
  return quantum::validate_density(ComplexMatrix::from_rows({
      {0.5, 0.0, 0.0, -0.5 * kI},
      {0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0},
      {0.5 * kI, 0.0, 0.0, 0.5},
  }));
}

ComplexMatrix ewl_payoff_operator(game::Player player) {
  const cplx inner = player == game::Player::kI ? 2.5 * kI : -2.5 * kI;
  return ComplexMatrix::from_rows({
      {2.0, 0.0, 0.0, -kI},
      {0.0, 2.5, inner, 0.0},
      {0.0, std::conj(inner), 2.5, 0.0},
      {kI, 0.0, 0.0, 2.0},
  });
}

game::RefereeMeasurement ewl_measurement() {
  const ComplexMatrix xx =
      linalg::kron(game::cyclic_shift(2, 1), game::cyclic_shift(2, 1));
  // J^dagger = (I - i X(x)X) / sqrt(2)
  const ComplexMatrix j_dagger =
      (ComplexMatrix::identity(4) - kI * xx) * cplx(1.0 / std::sqrt(2.0));
  std::vector<ComplexMatrix> elements;
  for (std::size_t k = 0; k < 4; ++k)
    elements.push_back(ComplexMatrix::unit(4, k, k) * j_dagger);
  return {quantum::validate_povm(std::move(elements)),
          {3.0, 0.0, 5.0, 1.0},
          {3.0, 5.0, 0.0, 1.0}};
}

EquilibriumStrategies ewl_equilibrium_strategies() {
  return {diagonal_chi(quantum::flat_index(0, 0, 2), quantum::flat_index(0, 1, 2)),
          diagonal_chi(quantum::flat_index(1, 0, 2), quantum::flat_index(1, 1, 2))};
}

NamedGame ewl_prisoners_dilemma(
    const std::optional<std::filesystem::path>& fixture_dir) {
  NamedGame out{
      "ewl-prisoners-dilemma",
      game::make_game(ewl_initial_state(),
                      ewl_payoff_operator(game::Player::kI),
                      ewl_payoff_operator(game::Player::kII), 2, 2),
      ewl_measurement(),
      {},
      std::nullopt};
  const EquilibriumStrategies eq = ewl_equilibrium_strategies();
  out.reference_strategies.emplace_back("chi_star", eq.chi_star);
  out.reference_strategies.emplace_back("xi_star", eq.xi_star);
  out.reference_strategies.emplace_back(
      "identity",
      quantum::kraus_to_chi(quantum::unitary_channel(ComplexMatrix::identity(2))));
  out.reference_strategies.emplace_back(
      "bit_flip",
      quantum::kraus_to_chi(quantum::unitary_channel(game::cyclic_shift(2, 1))));
  if (fixture_dir) out.reference_tensors = reference_payoff_tensors(*fixture_dir);
  return out;
}

}  // namespace qgame::builtin
