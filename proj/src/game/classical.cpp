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

#include "qgame/game/classical.hpp"

#include <fmt/format.h>

#include "qgame/game/payoff.hpp"
#include "qgame/quantum/kraus.hpp"

namespace qgame::game {

ComplexMatrix cyclic_shift(std::size_t n, std::size_t s) {
  ComplexMatrix m = ComplexMatrix::zeros(n);
  for (std::size_t k = 0; k < n; ++k) m((k + s) % n, k) = 1.0;
  return m;
}

ClassicalBimatrix classical_reduction(const QuantumGame& game) {
  if (game.n1() != game.n2()) {
    throw Error(ErrorKind::kUnsupportedDimension,
                fmt::format("classical reduction needs equal player "
                            "dimensions, got {} and {}",
                            game.n1(), game.n2()));
  }
  const std::size_t n = game.n1();
  std::vector<quantum::KrausChannel> pure;
  pure.reserve(n);
  for (std::size_t s = 0; s < n; ++s)
    pure.push_back(quantum::unitary_channel(cyclic_shift(n, s)));

  ClassicalBimatrix out{n, n, {}};
  out.entries.reserve(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      out.entries.emplace_back(
          payoff_direct(game, pure[s], pure[t], Player::kI),
          payoff_direct(game, pure[s], pure[t], Player::kII));
  return out;
}

}  // namespace qgame::game
