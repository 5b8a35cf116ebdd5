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

#ifndef QGAME_GAME_QUANTUM_GAME_HPP_
#define QGAME_GAME_QUANTUM_GAME_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "qgame/quantum/density.hpp"
#include "qgame/quantum/povm.hpp"

namespace qgame::game {

using linalg::ComplexMatrix;
using linalg::cplx;
using quantum::DensityMatrix;

enum class Player { kI, kII };

std::string_view player_name(Player p);
inline Player opponent_of(Player p) {
  return p == Player::kI ? Player::kII : Player::kI;
}

// A static two-player game: the referee's initial state and one Hermitian
// payoff operator per player. Player I acts on the first tensor factor
// (dimension n1), player II on the second (dimension n2).
class QuantumGame {
 public:
  const DensityMatrix& rho() const noexcept { return rho_; }
  const ComplexMatrix& payoff_op(Player p) const noexcept {
    return p == Player::kI ? payoff_op_i_ : payoff_op_ii_;
  }
  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  // Operator dimension of the given player.
  std::size_t dim_of(Player p) const noexcept {
    return p == Player::kI ? n1_ : n2_;
  }

 private:
  friend QuantumGame make_game(DensityMatrix, ComplexMatrix, ComplexMatrix,
                               std::size_t, std::size_t);
  QuantumGame(DensityMatrix rho, ComplexMatrix r1, ComplexMatrix r2,
              std::size_t n1, std::size_t n2)
      : rho_(std::move(rho)),
        payoff_op_i_(std::move(r1)),
        payoff_op_ii_(std::move(r2)),
        n1_(n1),
        n2_(n2) {}

  DensityMatrix rho_;
  ComplexMatrix payoff_op_i_;
  ComplexMatrix payoff_op_ii_;
  std::size_t n1_;
  std::size_t n2_;
};

// Throws kDimensionMismatch unless dim(rho) = dim(R) = n1 * n2, and
// kNotHermitian when a payoff operator is not Hermitian within
// kHermitianTol.
QuantumGame make_game(DensityMatrix rho, ComplexMatrix payoff_op_i,
                      ComplexMatrix payoff_op_ii, std::size_t n1,
                      std::size_t n2);

// R = sum_k a_k M_k^dagger M_k. Throws kLengthMismatch when the payoff
// vector does not have one entry per outcome.
ComplexMatrix payoff_operator(const quantum::Povm& povm,
                              std::span<const double> payoffs);

// The referee's measurement together with the payoff each outcome assigns.
struct RefereeMeasurement {
  quantum::Povm povm;
  std::vector<double> payoffs_i;
  std::vector<double> payoffs_ii;

  std::span<const double> payoffs(Player p) const {
    return p == Player::kI ? payoffs_i : payoffs_ii;
  }
};

}  // namespace qgame::game

#endif  // QGAME_GAME_QUANTUM_GAME_HPP_
