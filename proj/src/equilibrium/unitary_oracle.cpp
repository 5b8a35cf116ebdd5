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

#include "qgame/equilibrium/unitary_oracle.hpp"

#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

namespace qgame::equilibrium {

using linalg::cplx;

ComplexMatrix axis_angle_unitary(double angle, double polar, double azimuth) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const double nx = std::sin(polar) * std::cos(azimuth);
  const double ny = std::sin(polar) * std::sin(azimuth);
  const double nz = std::cos(polar);
  const cplx i(0.0, 1.0);
  // cos I - i sin (nx X + ny Y + nz Z)
  return ComplexMatrix::from_rows({
      {c - i * s * nz, -i * s * nx - s * ny},
      {-i * s * nx + s * ny, c + i * s * nz},
  });
}

OracleResult unitary_oracle(const game::PayoffTensor& a,
                            const ChiMatrix& opponent, Player player,
                            std::size_t resolution) {
  if (resolution == 0) {
    throw Error(ErrorKind::kUsageError, "oracle resolution must be positive");
  }
  const ResponseProblem problem = response_problem(a, opponent, player);
  if (problem.n != 2) {
    throw Error(ErrorKind::kUnsupportedDimension,
                fmt::format("unitary oracle handles qubit strategies only, "
                            "got dimension {}",
                            problem.n));
  }
  const ComplexMatrix& g = problem.effective;
  const double r = static_cast<double>(resolution);
  double best = -std::numeric_limits<double>::infinity();
  ComplexMatrix best_u;
  for (std::size_t ia = 0; ia < resolution; ++ia) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(ia) / r;
    for (std::size_t ib = 0; ib < resolution; ++ib) {
      const double polar = std::numbers::pi * static_cast<double>(ib) / r;
      for (std::size_t ic = 0; ic < resolution; ++ic) {
        const double azimuth =
            2.0 * std::numbers::pi * static_cast<double>(ic) / r;
        const ComplexMatrix u = axis_angle_unitary(angle, polar, azimuth);
        // tr(G vec(u) vec(u)^dagger) = vec(u)^dagger G vec(u)
        const auto v = u.data();
        double value = 0.0;
        for (std::size_t p = 0; p < 4; ++p) {
          cplx acc(0.0, 0.0);
          for (std::size_t q = 0; q < 4; ++q) acc += g(p, q) * v[q];
          value += (std::conj(v[p]) * acc).real();
        }
        if (value > best) {
          best = value;
          best_u = u;
        }
      }
    }
  }
  ChiMatrix chi = quantum::kraus_to_chi(quantum::unitary_channel(best_u));
  return {best, std::move(best_u), std::move(chi)};
}

}  // namespace qgame::equilibrium
