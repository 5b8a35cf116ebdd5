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

#ifndef QGAME_EQUILIBRIUM_UNITARY_ORACLE_HPP_
#define QGAME_EQUILIBRIUM_UNITARY_ORACLE_HPP_

#include "qgame/equilibrium/best_response.hpp"

namespace qgame::equilibrium {

struct OracleResult {
  double value = 0.0;
  ComplexMatrix unitary;
  ChiMatrix chi;
};

// U = cos(t/2) I - i sin(t/2) (n . sigma) on the grid
// t = 2 pi a / r, polar = pi b / r, azimuth = 2 pi c / r for a, b, c < r.
ComplexMatrix axis_angle_unitary(double angle, double polar, double azimuth);

// Brute-force maximum of the payoff over single-qubit unitary strategies.
// A lower bound on the best response. Throws kUnsupportedDimension unless
// the responding player has operator dimension 2, kUsageError when
// resolution is 0.
OracleResult unitary_oracle(const game::PayoffTensor& a,
                            const ChiMatrix& opponent, Player player,
                            std::size_t resolution = 24);

}  // namespace qgame::equilibrium

#endif  // QGAME_EQUILIBRIUM_UNITARY_ORACLE_HPP_
