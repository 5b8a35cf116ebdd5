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

#ifndef QGAME_EQUILIBRIUM_NASH_HPP_
#define QGAME_EQUILIBRIUM_NASH_HPP_

#include "qgame/equilibrium/best_response.hpp"
#include "qgame/game/quantum_game.hpp"

namespace qgame::equilibrium {

struct NashReport {
  bool is_equilibrium = false;
  // Best-response value minus current payoff, per player.
  double gap_i = 0.0;
  double gap_ii = 0.0;
  double payoff_i = 0.0;
  double payoff_ii = 0.0;
  BestResponseResult response_i;
  BestResponseResult response_ii;

  bool converged() const {
    return response_i.converged && response_ii.converged;
  }
};

// eps-Nash check of (chi, xi). Each best response is warm-started from the
// player's current strategy. is_equilibrium requires both solves to have
// converged and both gaps <= epsilon; gaps are reported either way.
NashReport verify_nash(const game::PayoffTensor& a_i,
                       const game::PayoffTensor& a_ii, const ChiMatrix& chi,
                       const ChiMatrix& xi, double epsilon,
                       const BestResponseOptions& options = {});

// Builds both tensors with the matrix-unit closed form first.
NashReport verify_nash(const game::QuantumGame& game, const ChiMatrix& chi,
                       const ChiMatrix& xi, double epsilon,
                       const BestResponseOptions& options = {});

}  // namespace qgame::equilibrium

#endif  // QGAME_EQUILIBRIUM_NASH_HPP_
