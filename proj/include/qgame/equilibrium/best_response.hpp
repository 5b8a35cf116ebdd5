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

#ifndef QGAME_EQUILIBRIUM_BEST_RESPONSE_HPP_
#define QGAME_EQUILIBRIUM_BEST_RESPONSE_HPP_

// Best response over the full set of physical strategies.
//
// With the opponent fixed, a player's payoff is linear in their own chi:
// payoff = tr(G chi). Maximizing it over valid chi matrices is the
// semidefinite program
//
//   max tr(H chi)  s.t.  chi >= 0,  Tr_1(chi) = I        (H = herm. part of G)
//
// where Tr_1 sums over the first matrix-unit index. Its dual is
//
//   min tr(Y)      s.t.  I (x) Y - H >= 0,
//
// and any dual-feasible Y bounds every primal value from above.
//
// The primal is solved by projected gradient ascent, chi <- P(chi + s H),
// with P the Euclidean projection onto the feasible set computed by
// Dykstra's alternating projections between the PSD cone and the affine
// trace-preserving subspace. Each iterate is made exactly feasible and
// scored; the dual candidate Y = herm(Tr_1(H chi)) (exact at an optimum by
// complementary slackness) is shifted by t I with the smallest t that makes
// it feasible, t = lambda_max(H - I (x) Y). The solve stops once the best
// dual bound is within `tol` of the best primal value.

#include <cstddef>
#include <optional>

#include "qgame/game/payoff_tensor.hpp"
#include "qgame/quantum/chi.hpp"

namespace qgame::equilibrium {

using game::Player;
using linalg::ComplexMatrix;
using quantum::ChiMatrix;

struct ResponseProblem {
  // payoff(chi) = tr(effective * chi); effective_{ba} = sum_{gd} opp_gd A_abgd
  // for player I (the analogous contraction over alpha, beta for player II).
  ComplexMatrix effective;
  std::size_t n = 0;  // the responding player's operator dimension
  Player player = Player::kI;
};

// Throws kDimensionMismatch when the opponent does not fit the tensor, and
// kUsageError when the tensor belongs to the other player.
ResponseProblem response_problem(const game::PayoffTensor& a,
                                 const ChiMatrix& opponent, Player player);

// tr(effective * chi); kNonRealPayoff when |imag| > kRealPayoffTol.
double response_value(const ResponseProblem& problem, const ChiMatrix& chi);

struct BestResponseOptions {
  std::size_t max_iters = 5000;
  double tol = 1e-7;
  // Gradient step is step_scale / ||H||_2.
  double step_scale = 0.5;
  std::size_t projection_iters = 2000;
  double projection_tol = 1e-13;
};

struct BestResponseResult {
  double value = 0.0;
  ChiMatrix chi_opt;
  double dual_bound = 0.0;
  double gap = 0.0;  // dual_bound - value
  std::size_t iterations = 0;
  bool converged = false;
};

// Never throws on slow convergence: the best feasible iterate is returned
// with converged = false and the remaining gap. Throws
// kInfeasibleProjection if an iterate cannot be made feasible.
BestResponseResult best_response(
    const ResponseProblem& problem, const BestResponseOptions& options = {},
    const std::optional<ChiMatrix>& start = std::nullopt);

// Building blocks, exposed for testing.

// Dykstra projection of a Hermitian matrix onto
// {chi >= 0, Tr_1(chi) = I}. Returns a PSD matrix whose trace condition
// holds to roughly `tol`.
ComplexMatrix project_strategy_set(const ComplexMatrix& m, std::size_t n,
                                   std::size_t max_iters = 2000,
                                   double tol = 1e-13);

// Exactly trace-preserving (affine projection) and PSD (blend towards I/n by
// the least amount that lifts the smallest eigenvalue to zero).
ComplexMatrix make_feasible(const ComplexMatrix& m, std::size_t n);

// Upper bound on max tr(h chi) over valid chi, from the dual candidate
// built at `chi`. Valid for any Hermitian h and any chi.
double dual_bound(const ComplexMatrix& h, std::size_t n,
                  const ComplexMatrix& chi);

}  // namespace qgame::equilibrium

#endif  // QGAME_EQUILIBRIUM_BEST_RESPONSE_HPP_
