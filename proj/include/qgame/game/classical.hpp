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

#ifndef QGAME_GAME_CLASSICAL_HPP_
#define QGAME_GAME_CLASSICAL_HPP_

#include <utility>
#include <vector>

#include "qgame/game/quantum_game.hpp"

namespace qgame::game {

struct ClassicalBimatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  // Row-major (payoff I, payoff II).
  std::vector<std::pair<double, double>> entries;

  const std::pair<double, double>& at(std::size_t r, std::size_t c) const {
    return entries[r * cols + c];
  }
};

// Cyclic shift X^s on C^n: |k> -> |k + s mod n>. For n = 2, s = 1 is the
// bit flip.
ComplexMatrix cyclic_shift(std::size_t n, std::size_t s);

// Pure classical strategies only: player strategy s is the unitary X^s.
// Throws kUnsupportedDimension unless n1 == n2.
ClassicalBimatrix classical_reduction(const QuantumGame& game);

}  // namespace qgame::game

#endif  // QGAME_GAME_CLASSICAL_HPP_
