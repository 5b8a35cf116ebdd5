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

#include "qgame/linalg/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qgame/errors.hpp"

namespace qgame::linalg {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t q = p + 1; q < a.dim(); ++q) sum += std::norm(a(p, q));
  return std::sqrt(2.0 * sum);
}

// Plain complex product. std::complex's operator* goes through the
// Annex G NaN/Inf recovery path, which dominates this loop; inputs here are
// always finite.
inline cplx mul(cplx x, cplx y) {
  return {x.real() * y.real() - x.imag() * y.imag(),
          x.real() * y.imag() + x.imag() * y.real()};
}

// Zeroes a(p, q) with the unitary U = diag-phase * real rotation acting on
// columns p and q, and accumulates U into v.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const cplx phase_conj(apq.real() / mag, -apq.imag() / mag);  // e^{-i phi}
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  // U restricted to (p, q):  [[c, s], [-s conj(phase), c conj(phase)]]
  const cplx u_qp = -s * phase_conj;
  const cplx u_qq = c * phase_conj;
  const cplx u_qp_c = std::conj(u_qp);
  const cplx u_qq_c = std::conj(u_qq);
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {  // a <- a U
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * c + mul(akq, u_qp);
    a(k, q) = akp * s + mul(akq, u_qq);
  }
  for (std::size_t k = 0; k < n; ++k) {  // a <- U^dagger a
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk + mul(u_qp_c, aqk);
    a(q, k) = s * apk + mul(u_qq_c, aqk);
  }
  for (std::size_t k = 0; k < n; ++k) {  // v <- v U
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = vkp * c + mul(vkq, u_qp);
    v(k, q) = vkp * s + mul(vkq, u_qq);
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m, double hermitian_tol) {
  const double residual = m.hermiticity_residual();
  if (residual > hermitian_tol) {
    throw Error(ErrorKind::kNotHermitian,
                "max |m - m^dagger| = " + std::to_string(residual) +
                    " exceeds " + std::to_string(hermitian_tol),
                residual);
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();
  const double target = 1e-15 * scale;

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kJacobiSweepBudget && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    // Entries this small cannot keep the off-diagonal norm above target.
    const double skip = std::max(target / static_cast<double>(n), 1e-300);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > skip) rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > target) {
    throw Error(ErrorKind::kNoConvergence,
                "Jacobi iteration did not converge in " +
                    std::to_string(kJacobiSweepBudget) + " sweeps",
                off_diagonal_norm(a));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix::zeros(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix reconstruct(const HermitianEigen& eig) {
  const std::size_t n = eig.vectors.dim();
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) scaled(r, k) *= eig.values[k];
  return scaled * eig.vectors.adjoint();
}

double min_eigenvalue(const ComplexMatrix& m, double hermitian_tol) {
  return hermitian_eigen(m, hermitian_tol).values.back();
}

double max_eigenvalue(const ComplexMatrix& m, double hermitian_tol) {
  return hermitian_eigen(m, hermitian_tol).values.front();
}

bool is_psd(const ComplexMatrix& m, double tol, double hermitian_tol) {
  return min_eigenvalue(m, hermitian_tol) >= -tol;
}

ComplexMatrix project_psd(const ComplexMatrix& m, double hermitian_tol) {
  HermitianEigen eig = hermitian_eigen(m, hermitian_tol);
  for (double& lambda : eig.values) lambda = std::max(lambda, 0.0);
  return reconstruct(eig);
}

}  // namespace qgame::linalg
