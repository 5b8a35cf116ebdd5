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

#ifndef QGAME_GAME_PAYOFF_TENSOR_HPP_
#define QGAME_GAME_PAYOFF_TENSOR_HPP_

// Payoff tensor A_{alpha beta gamma delta} of one player. alpha, beta label
// player I's matrix units (n1^2 values each), gamma, delta player II's.
//
// Storage is row-major over (alpha, beta, gamma, delta), which coincides
// with the usual 16 x 16 layout of the reference tables for qubit games:
//   row = alpha * n1^2 + beta,   col = gamma * n2^2 + delta,
// where a label (i, j) is itself i * n + j. Reading the four sub-indices of
// a row as binary digits gives that row's 0-based number.

#include <span>
#include <vector>

#include "qgame/game/quantum_game.hpp"

namespace qgame::game {

class PayoffTensor {
 public:
  // Throws kDimensionMismatch unless entries.size() == n1^4 * n2^4.
  PayoffTensor(std::size_t n1, std::size_t n2, Player player,
               std::vector<cplx> entries);
  static PayoffTensor zeros(std::size_t n1, std::size_t n2, Player player);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  Player player() const noexcept { return player_; }
  std::size_t rows() const noexcept { return n1_ * n1_ * n1_ * n1_; }
  std::size_t cols() const noexcept { return n2_ * n2_ * n2_ * n2_; }

  cplx operator()(std::size_t alpha, std::size_t beta, std::size_t gamma,
                  std::size_t delta) const {
    return entries_[index(alpha, beta, gamma, delta)];
  }
  cplx& operator()(std::size_t alpha, std::size_t beta, std::size_t gamma,
                   std::size_t delta) {
    return entries_[index(alpha, beta, gamma, delta)];
  }
  cplx flat(std::size_t row, std::size_t col) const {
    return entries_[row * cols() + col];
  }
  std::span<const cplx> row(std::size_t r) const {
    return std::span<const cplx>(entries_).subspan(r * cols(), cols());
  }
  std::span<const cplx> data() const noexcept { return entries_; }

  // max |A_{ab gd} - conj(A_{ba dg})|. Zero (to rounding) for every tensor
  // built from a Hermitian payoff operator and state; this pairing is what
  // makes contractions with Hermitian chi, xi real.
  double pairing_residual() const;

 private:
  std::size_t index(std::size_t alpha, std::size_t beta, std::size_t gamma,
                    std::size_t delta) const {
    const std::size_t s1 = n1_ * n1_;
    const std::size_t s2 = n2_ * n2_;
    return ((alpha * s1 + beta) * s2 + gamma) * s2 + delta;
  }

  std::size_t n1_;
  std::size_t n2_;
  Player player_;
  std::vector<cplx> entries_;
};

// Literal evaluation of tr[R (E~_a (x) E~_g) rho (E~_b^dagger (x) E~_d^dagger)]
// over all matrix-unit labels.
PayoffTensor payoff_tensor_general(const QuantumGame& game, Player player);

// Closed form for the matrix-unit basis, with alpha=(a,b), beta=(c,d),
// gamma=(i,j), delta=(k,l):
//   A = R_{(c*n2 + k),(a*n2 + i)} * rho_{(b*n2 + j),(d*n2 + l)}.
PayoffTensor payoff_tensor_matrix_unit(const QuantumGame& game, Player player);

// Largest entrywise difference; throws kDimensionMismatch on shape mismatch.
double max_abs_diff(const PayoffTensor& a, const PayoffTensor& b);

}  // namespace qgame::game

#endif  // QGAME_GAME_PAYOFF_TENSOR_HPP_
