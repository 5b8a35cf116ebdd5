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

#include "qgame/quantum/chi.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "qgame/linalg/hermitian_eigen.hpp"

namespace qgame::quantum {
namespace {

void require_chi_dim(const ComplexMatrix& m, std::size_t n) {
  if (n == 0 || m.dim() != n * n) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("chi matrix for operator dimension {} must be "
                            "{} x {}, got {} x {}",
                            n, n * n, n * n, m.dim(), m.dim()));
  }
}

}  // namespace

std::vector<cplx> flatten(const ComplexMatrix& m) {
  return {m.data().begin(), m.data().end()};
}

ComplexMatrix unflatten(std::span<const cplx> v, std::size_t n) {
  if (v.size() != n * n) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("cannot reshape {} coefficients into {} x {}",
                            v.size(), n, n));
  }
  return ComplexMatrix(n, std::vector<cplx>(v.begin(), v.end()));
}

ComplexMatrix outer_partial_trace(const ComplexMatrix& m, std::size_t n) {
  require_chi_dim(m, n);
  ComplexMatrix y = ComplexMatrix::zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        y(j, l) += m(flat_index(i, j, n), flat_index(i, l, n));
  return y;
}

ComplexMatrix identity_kron(std::size_t n, const ComplexMatrix& y) {
  return linalg::kron(ComplexMatrix::identity(n), y);
}

ComplexMatrix project_trace_preserving(const ComplexMatrix& m, std::size_t n) {
  ComplexMatrix excess = outer_partial_trace(m, n) - ComplexMatrix::identity(n);
  excess *= 1.0 / static_cast<double>(n);
  return m - identity_kron(n, excess);
}

std::vector<ConditionCheck> chi_checks(const ComplexMatrix& m, std::size_t n,
                                       double tol) {
  require_chi_dim(m, n);
  const double herm_tol = std::max(kHermitianTol, tol);
  const double trace_dev =
      (outer_partial_trace(m, n) - ComplexMatrix::identity(n)).max_abs();
  const double lowest = linalg::min_eigenvalue(m.hermitian_part());
  double minor_violation = 0.0;
  for (std::size_t a = 0; a < m.dim(); ++a)
    for (std::size_t b = a + 1; b < m.dim(); ++b)
      minor_violation =
          std::max(minor_violation, std::norm(m(a, b)) -
                                        m(a, a).real() * m(b, b).real());
  return {
      {ErrorKind::kNotHermitian, "Hermitian", m.hermiticity_residual(),
       herm_tol},
      {ErrorKind::kTraceConditionViolation,
       "trace preservation sum_i chi_(ij)(il) = delta_jl", trace_dev, tol},
      {ErrorKind::kNotPositive, "positive semidefinite", std::max(0.0, -lowest),
       tol},
      {ErrorKind::kNotPositive, "principal minors chi_aa chi_bb >= |chi_ab|^2",
       minor_violation, tol},
  };
}

ChiMatrix validate_chi(const ComplexMatrix& m, std::size_t n, double tol) {
  throw_first_failure(chi_checks(m, n, tol), "chi matrix");
  return ChiMatrix(m, n, tol);
}

ChiMatrix kraus_to_chi(const KrausChannel& ch) {
  const std::size_t n = ch.dim();
  ComplexMatrix chi = ComplexMatrix::zeros(n * n);
  for (const ComplexMatrix& e : ch.operators()) {
    const std::span<const cplx> coeff = e.data();
    for (std::size_t a = 0; a < n * n; ++a)
      for (std::size_t b = 0; b < n * n; ++b)
        chi(a, b) += coeff[a] * std::conj(coeff[b]);
  }
  return ChiMatrix(std::move(chi), n, ch.tolerance());
}

KrausChannel chi_to_kraus(const ChiMatrix& chi) {
  const std::size_t n = chi.n();
  const linalg::HermitianEigen eig =
      linalg::hermitian_eigen(chi.matrix(), std::max(kHermitianTol,
                                                     chi.tolerance()));
  std::vector<ComplexMatrix> ops;
  double dropped = 0.0;
  std::vector<cplx> column(n * n);
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double lambda = eig.values[k];
    if (lambda <= kKrausRankTol) {
      dropped += std::abs(lambda);
      continue;
    }
    const double scale = std::sqrt(lambda);
    for (std::size_t r = 0; r < n * n; ++r) column[r] = scale * eig.vectors(r, k);
    ops.push_back(unflatten(column, n));
  }
  if (ops.empty()) {
    throw Error(ErrorKind::kNotInOmega, "chi matrix has no positive eigenvalue");
  }
  return KrausChannel(std::move(ops), chi.tolerance() + dropped);
}

DensityMatrix apply_chi(const ChiMatrix& chi, const DensityMatrix& rho) {
  const std::size_t n = chi.n();
  if (rho.dim() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("chi acts on dimension {}, state has {}", n,
                            rho.dim()));
  }
  const ComplexMatrix& c = chi.matrix();
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix out = ComplexMatrix::zeros(n);
  // (n_[ij] rho n_[kl]^dagger)_{ik} = rho_{jl}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          out(i, k) += c(flat_index(i, j, n), flat_index(k, l, n)) * r(j, l);
  const double tol =
      std::max(kValidationTol, static_cast<double>(n) * chi.tolerance());
  return validate_density(out.hermitian_part(), tol);
}

ChiMatrix maximally_mixing_chi(std::size_t n) {
  ComplexMatrix m = ComplexMatrix::identity(n * n);
  m *= 1.0 / static_cast<double>(n);
  return ChiMatrix(std::move(m), n, kValidationTol);
}

ChiMatrix mix(const ChiMatrix& a, const ChiMatrix& b, double t, double tol) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "cannot mix chi matrices of different operator dimension");
  }
  return validate_chi(t * a.matrix() + (1.0 - t) * b.matrix(), a.n(), tol);
}

}  // namespace qgame::quantum
