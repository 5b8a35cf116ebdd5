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

#include "qgame/game/quantum_game.hpp"

#include <fmt/format.h>

namespace qgame::game {

std::string_view player_name(Player p) {
  return p == Player::kI ? "I" : "II";
}

QuantumGame make_game(DensityMatrix rho, ComplexMatrix payoff_op_i,
                      ComplexMatrix payoff_op_ii, std::size_t n1,
                      std::size_t n2) {
  const std::size_t d = n1 * n2;
  if (d == 0 || rho.dim() != d || payoff_op_i.dim() != d ||
      payoff_op_ii.dim() != d) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("game with n1 = {}, n2 = {} needs {} x {} "
                            "matrices; got rho {}, R^I {}, R^II {}",
                            n1, n2, d, d, rho.dim(), payoff_op_i.dim(),
                            payoff_op_ii.dim()));
  }
  for (const auto* r : {&payoff_op_i, &payoff_op_ii}) {
    const double residual = r->hermiticity_residual();
    if (residual > kHermitianTol) {
      throw Error(ErrorKind::kNotHermitian,
                  fmt::format("payoff operator R^{} is not Hermitian "
                              "(residual {:.3e})",
                              r == &payoff_op_i ? "I" : "II", residual),
                  residual);
    }
  }
  return QuantumGame(std::move(rho), std::move(payoff_op_i),
                     std::move(payoff_op_ii), n1, n2);
}

ComplexMatrix payoff_operator(const quantum::Povm& povm,
                              std::span<const double> payoffs) {
  if (payoffs.size() != povm.outcomes()) {
    throw Error(ErrorKind::kLengthMismatch,
                fmt::format("{} payoffs for a measurement with {} outcomes",
                            payoffs.size(), povm.outcomes()));
  }
  ComplexMatrix r = ComplexMatrix::zeros(povm.dim());
  for (std::size_t k = 0; k < payoffs.size(); ++k)
    r += payoffs[k] * povm.effects()[k];
  return r.hermitian_part();
}

}  // namespace qgame::game
