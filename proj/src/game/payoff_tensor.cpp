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

#include "qgame/game/payoff_tensor.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "qgame/linalg/complex_matrix.hpp"

namespace qgame::game {

PayoffTensor::PayoffTensor(std::size_t n1, std::size_t n2, Player player,
                           std::vector<cplx> entries)
    : n1_(n1), n2_(n2), player_(player), entries_(std::move(entries)) {
  if (n1_ == 0 || n2_ == 0 || entries_.size() != rows() * cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("payoff tensor for n1 = {}, n2 = {} needs {} "
                            "entries, got {}",
                            n1_, n2_, rows() * cols(), entries_.size()));
  }
}

PayoffTensor PayoffTensor::zeros(std::size_t n1, std::size_t n2,
                                 Player player) {
  const std::size_t count = n1 * n1 * n1 * n1 * n2 * n2 * n2 * n2;
  return PayoffTensor(n1, n2, player, std::vector<cplx>(count));
}

double PayoffTensor::pairing_residual() const {
  const std::size_t s1 = n1_ * n1_;
  const std::size_t s2 = n2_ * n2_;
  double worst = 0.0;
  for (std::size_t a = 0; a < s1; ++a)
    for (std::size_t b = 0; b < s1; ++b)
      for (std::size_t g = 0; g < s2; ++g)
        for (std::size_t d = 0; d < s2; ++d)
          worst = std::max(worst, std::abs((*this)(a, b, g, d) -
                                           std::conj((*this)(b, a, d, g))));
  return worst;
}

PayoffTensor payoff_tensor_general(const QuantumGame& game, Player player) {
  const std::size_t n1 = game.n1();
  const std::size_t n2 = game.n2();
  const std::size_t s1 = n1 * n1;
  const std::size_t s2 = n2 * n2;
  const ComplexMatrix& r = game.payoff_op(player);
  const ComplexMatrix& rho = game.rho().matrix();

  // tr[R L_ag rho L_bd^dagger] with L_ag = E~_a (x) E~_g. The left factor
  // R L_ag rho depends only on (a, g) and the right one only on (b, d).
  std::vector<ComplexMatrix> left;
  std::vector<ComplexMatrix> right;
  left.reserve(s1 * s2);
  right.reserve(s1 * s2);
  for (std::size_t a = 0; a < s1; ++a)
    for (std::size_t g = 0; g < s2; ++g) {
      const ComplexMatrix l =
          linalg::kron(ComplexMatrix::unit(n1, a / n1, a % n1),
                       ComplexMatrix::unit(n2, g / n2, g % n2));
      left.push_back(r * l * rho);
      right.push_back(l.adjoint());
    }

  PayoffTensor out = PayoffTensor::zeros(n1, n2, player);
  for (std::size_t a = 0; a < s1; ++a)
    for (std::size_t b = 0; b < s1; ++b)
      for (std::size_t g = 0; g < s2; ++g)
        for (std::size_t d = 0; d < s2; ++d)
          out(a, b, g, d) = linalg::trace_of_product(left[a * s2 + g],
                                                     right[b * s2 + d]);
  return out;
}

PayoffTensor payoff_tensor_matrix_unit(const QuantumGame& game,
                                       Player player) {
  const std::size_t n1 = game.n1();
  const std::size_t n2 = game.n2();
  const ComplexMatrix& r = game.payoff_op(player);
  const ComplexMatrix& rho = game.rho().matrix();

  PayoffTensor out = PayoffTensor::zeros(n1, n2, player);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b)
      for (std::size_t c = 0; c < n1; ++c)
        for (std::size_t d = 0; d < n1; ++d)
          for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n2; ++j)
              for (std::size_t k = 0; k < n2; ++k)
                for (std::size_t l = 0; l < n2; ++l)
                  out(a * n1 + b, c * n1 + d, i * n2 + j, k * n2 + l) =
                      r(c * n2 + k, a * n2 + i) * rho(b * n2 + j, d * n2 + l);
  return out;
}

double max_abs_diff(const PayoffTensor& a, const PayoffTensor& b) {
  if (a.n1() != b.n1() || a.n2() != b.n2()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "cannot compare payoff tensors of different shape");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

}  // namespace qgame::game
