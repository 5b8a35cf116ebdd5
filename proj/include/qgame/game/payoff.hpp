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

#ifndef QGAME_GAME_PAYOFF_HPP_
#define QGAME_GAME_PAYOFF_HPP_

#include "qgame/game/payoff_tensor.hpp"
#include "qgame/quantum/chi.hpp"
#include "qgame/quantum/kraus.hpp"

namespace qgame::game {

using quantum::ChiMatrix;
using quantum::KrausChannel;

// sum chi_ab xi_gd A_abgd, before the reality check.
cplx payoff_contract_complex(const PayoffTensor& a, const ChiMatrix& chi,
                             const ChiMatrix& xi);

// Real payoff. Throws kDimensionMismatch when chi/xi do not fit the tensor
// and kNonRealPayoff when |imag| > kRealPayoffTol.
double payoff_contract(const PayoffTensor& a, const ChiMatrix& chi,
                       const ChiMatrix& xi);

// tr(R^j pi) with pi the state after both players' channels.
double payoff_direct(const QuantumGame& game, const KrausChannel& ch_i,
                     const KrausChannel& ch_ii, Player player);

}  // namespace qgame::game

#endif  // QGAME_GAME_PAYOFF_HPP_
