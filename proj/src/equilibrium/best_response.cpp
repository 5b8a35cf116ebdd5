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

#include "qgame/equilibrium/best_response.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <vector>

#include "qgame/kernels/kernels.hpp"
#include "qgame/linalg/hermitian_eigen.hpp"

namespace qgame::equilibrium {

using linalg::cplx;

namespace {

// Matrices produced inside the solver are Hermitian up to accumulated
// rounding; this is only a guard against outright corruption.
constexpr double kInternalHermitianTol = 1e-8;

// Effective matrices at or below this magnitude are treated as zero.
constexpr double kDegenerateScale = 1e-15;

}  // namespace

ResponseProblem response_problem(const game::PayoffTensor& a,
                                 const ChiMatrix& opponent, Player player) {
  if (a.player() != player) {
    throw Error(ErrorKind::kUsageError,
                fmt::format("best response of player {} needs that player's "
                            "tensor, got A^{}",
                            game::player_name(player),
                            game::player_name(a.player())));
  }
  const std::size_t own = player == Player::kI ? a.n1() : a.n2();
  const std::size_t other = player == Player::kI ? a.n2() : a.n1();
  if (opponent.n() != other) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("opponent strategy has dimension {}, tensor "
                            "expects {}",
                            opponent.n(), other));
  }
  const kernels::KernelTable& k = kernels::active_kernels();
  const cplx* opp = opponent.matrix().data().data();
  const std::size_t s = own * own;
  std::vector<cplx> contracted(s * s, cplx(0.0, 0.0));
  if (player == Player::kI) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      contracted[r] = k.dot(a.row(r).data(), opp, a.cols());
  } else {
    for (std::size_t r = 0; r < a.rows(); ++r)
      k.axpy(opp[r], a.row(r).data(), contracted.data(), a.cols());
  }
  // contracted holds K_{ab}; the effective matrix is its transpose.
  const ComplexMatrix kmat(s, std::move(contracted));
  return {kmat.transpose(), own, player};
}

double response_value(const ResponseProblem& problem, const ChiMatrix& chi) {
  if (chi.n() != problem.n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "strategy does not match the response problem");
  }
  const cplx v = linalg::trace_of_product(problem.effective, chi.matrix());
  if (std::abs(v.imag()) > kRealPayoffTol) {
    throw Error(ErrorKind::kNonRealPayoff,
                fmt::format("payoff has imaginary part {:.3e}", v.imag()),
                std::abs(v.imag()));
  }
  return v.real();
}

ComplexMatrix project_strategy_set(const ComplexMatrix& m, std::size_t n,
                                   std::size_t max_iters, double tol) {
  const std::size_t dim = n * n;
  ComplexMatrix x = m.hermitian_part();
  ComplexMatrix p = ComplexMatrix::zeros(dim);
  ComplexMatrix q = ComplexMatrix::zeros(dim);
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  for (std::size_t it = 0; it < max_iters; ++it) {
    const ComplexMatrix xp = x + p;
    const ComplexMatrix y = quantum::project_trace_preserving(xp, n);
    p = xp - y;
    const ComplexMatrix yq = y + q;
    ComplexMatrix next =
        linalg::project_psd(yq.hermitian_part(), kInternalHermitianTol);
    q = yq - next;
    const double moved = linalg::max_abs_diff(next, x);
    x = std::move(next);
    if (moved <= tol &&
        (quantum::outer_partial_trace(x, n) - eye).max_abs() <= tol)
      break;
  }
  return x;
}

ComplexMatrix make_feasible(const ComplexMatrix& m, std::size_t n) {
  ComplexMatrix y = quantum::project_trace_preserving(m.hermitian_part(), n);
  const double lowest = linalg::min_eigenvalue(y, kInternalHermitianTol);
  if (lowest < 0.0) {
    // I/n has outer partial trace I and smallest eigenvalue 1/n, so the
    // blend keeps the trace condition and lifts the spectrum to >= 0.
    const double inv_n = 1.0 / static_cast<double>(n);
    const double t = -lowest / (inv_n - lowest);
    y *= (1.0 - t);
    for (std::size_t i = 0; i < n * n; ++i) y(i, i) += t * inv_n;
  }
  return y;
}

double dual_bound(const ComplexMatrix& h, std::size_t n,
                  const ComplexMatrix& chi) {
  const ComplexMatrix y =
      quantum::outer_partial_trace(h * chi, n).hermitian_part();
  const double shift = linalg::max_eigenvalue(
      (h - quantum::identity_kron(n, y)).hermitian_part(),
      kInternalHermitianTol);
  return y.trace().real() + static_cast<double>(n) * shift;
}

BestResponseResult best_response(const ResponseProblem& problem,
                                 const BestResponseOptions& options,
                                 const std::optional<ChiMatrix>& start) {
  const std::size_t n = problem.n;
  if (start && start->n() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "warm start does not match the response problem");
  }
  const ComplexMatrix h = problem.effective.hermitian_part();
  const linalg::HermitianEigen spectrum =
      linalg::hermitian_eigen(h, kInternalHermitianTol);
  const double scale = std::max(std::abs(spectrum.values.front()),
                                std::abs(spectrum.values.back()));

  if (problem.effective.max_abs() <= kDegenerateScale || scale == 0.0) {
    ChiMatrix mixing = quantum::maximally_mixing_chi(n);
    return {0.0, std::move(mixing), 0.0, 0.0, 0, true};
  }

  const double step = options.step_scale / scale;
  ComplexMatrix x = start ? start->matrix() : quantum::maximally_mixing_chi(n).matrix();
  ComplexMatrix best = x;
  double best_value = -std::numeric_limits<double>::infinity();
  double best_dual = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  bool converged = false;

  for (std::size_t it = 0;; ++it) {
    const ComplexMatrix feasible = make_feasible(x, n);
    const double value = linalg::trace_of_product(h, feasible).real();
    if (value > best_value) {
      best_value = value;
      best = feasible;
    }
    best_dual = std::min(best_dual, dual_bound(h, n, feasible));
    iterations = it;
    if (best_dual - best_value <= options.tol) {
      converged = true;
      break;
    }
    if (it >= options.max_iters) break;
    x = project_strategy_set(x + step * h, n, options.projection_iters,
                             options.projection_tol);
  }

  ChiMatrix chi_opt = [&] {
    try {
      return quantum::validate_chi(best, n);
    } catch (const Error& e) {
      throw Error(ErrorKind::kInfeasibleProjection,
                  std::string("best-response iterate is not a valid strategy: ") +
                      e.what());
    }
  }();
  return {best_value, std::move(chi_opt), best_dual,
          std::max(0.0, best_dual - best_value), iterations, converged};
}

}  // namespace qgame::equilibrium
