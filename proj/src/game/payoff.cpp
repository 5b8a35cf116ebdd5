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

#include "qgame/game/payoff.hpp"

#include <cmath>
#include <fmt/format.h>
#include <vector>

#include "qgame/kernels/kernels.hpp"

namespace qgame::game {

cplx payoff_contract_complex(const PayoffTensor& a, const ChiMatrix& chi,
                             const ChiMatrix& xi) {
  if (chi.n() != a.n1() || xi.n() != a.n2()) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("tensor expects strategies of dimension ({}, {}), "
                            "got ({}, {})",
                            a.n1(), a.n2(), chi.n(), xi.n()));
  }
  const kernels::KernelTable& k = kernels::active_kernels();
  // Contract the opponent's indices row by row, then player I's.
  std::vector<cplx> partial(a.rows());
  const cplx* xi_flat = xi.matrix().data().data();
  for (std::size_t r = 0; r < a.rows(); ++r)
    partial[r] = k.dot(a.row(r).data(), xi_flat, a.cols());
  return k.dot(chi.matrix().data().data(), partial.data(), a.rows());
}

double payoff_contract(const PayoffTensor& a, const ChiMatrix& chi,
                       const ChiMatrix& xi) {
  const cplx value = payoff_contract_complex(a, chi, xi);
  if (std::abs(value.imag()) > kRealPayoffTol) {
    throw Error(ErrorKind::kNonRealPayoff,
                fmt::format("payoff has imaginary part {:.3e}", value.imag()),
                std::abs(value.imag()));
  }
  return value.real();
}

double payoff_direct(const QuantumGame& game, const KrausChannel& ch_i,
                     const KrausChannel& ch_ii, Player player) {
  if (ch_i.dim() != game.n1() || ch_ii.dim() != game.n2()) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("game expects channels of dimension ({}, {}), "
                            "got ({}, {})",
                            game.n1(), game.n2(), ch_i.dim(), ch_ii.dim()));
  }
  const quantum::DensityMatrix pi =
      quantum::apply_product_channel(ch_i, ch_ii, game.rho());
  return linalg::trace_of_product(game.payoff_op(player), pi.matrix()).real();
}

}  // namespace qgame::game
