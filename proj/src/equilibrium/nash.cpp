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

#include "qgame/equilibrium/nash.hpp"

#include <algorithm>

namespace qgame::equilibrium {

NashReport verify_nash(const game::PayoffTensor& a_i,
                       const game::PayoffTensor& a_ii, const ChiMatrix& chi,
                       const ChiMatrix& xi, double epsilon,
                       const BestResponseOptions& options) {
  const ResponseProblem p_i = response_problem(a_i, xi, Player::kI);
  const ResponseProblem p_ii = response_problem(a_ii, chi, Player::kII);
  const double payoff_i = response_value(p_i, chi);
  const double payoff_ii = response_value(p_ii, xi);
  BestResponseResult br_i = best_response(p_i, options, chi);
  BestResponseResult br_ii = best_response(p_ii, options, xi);
  // The current strategy is feasible, so the true best response is at least
  // the current payoff; clamp tiny negative gaps from rounding.
  const double gap_i = std::max(0.0, br_i.value - payoff_i);
  const double gap_ii = std::max(0.0, br_ii.value - payoff_ii);
  const bool ok = br_i.converged && br_ii.converged && gap_i <= epsilon &&
                  gap_ii <= epsilon;
  return {ok,       gap_i,           gap_ii,          payoff_i,
          payoff_ii, std::move(br_i), std::move(br_ii)};
}

NashReport verify_nash(const game::QuantumGame& game, const ChiMatrix& chi,
                       const ChiMatrix& xi, double epsilon,
                       const BestResponseOptions& options) {
  const game::PayoffTensor a_i =
      game::payoff_tensor_matrix_unit(game, Player::kI);
  const game::PayoffTensor a_ii =
      game::payoff_tensor_matrix_unit(game, Player::kII);
  return verify_nash(a_i, a_ii, chi, xi, epsilon, options);
}

}  // namespace qgame::equilibrium
