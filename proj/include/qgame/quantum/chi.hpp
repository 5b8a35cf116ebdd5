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

#ifndef QGAME_QUANTUM_CHI_HPP_
#define QGAME_QUANTUM_CHI_HPP_

// Channels in the chi representation over the matrix-unit basis
// {n_[ij]}. The basis label alpha = (i, j) is flattened to i * n + j, so
// chi is an n^2 x n^2 matrix with chi_{(i,j),(k,l)} = sum_m (E_m)_{ij}
// conj((E_m)_{kl}), i.e. chi = sum_m vec(E_m) vec(E_m)^dagger with row-major
// vec. All indices are 0-based.
//
// A chi matrix describes a trace-preserving operation when
//   sum_i chi_{(i,j),(i,l)} = delta_{jl}    for all j, l,
// which is "the partial trace over the first basis index equals I".

#include <span>
#include <vector>

#include "qgame/quantum/kraus.hpp"

namespace qgame::quantum {

class ChiMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  // Dimension of the operators the channel acts with.
  std::size_t n() const noexcept { return n_; }
  double tolerance() const noexcept { return tol_; }

 private:
  friend ChiMatrix validate_chi(const ComplexMatrix&, std::size_t, double);
  friend ChiMatrix kraus_to_chi(const KrausChannel&);
  friend ChiMatrix maximally_mixing_chi(std::size_t);
  ChiMatrix(ComplexMatrix m, std::size_t n, double tol)
      : matrix_(std::move(m)), n_(n), tol_(tol) {}

  ComplexMatrix matrix_;
  std::size_t n_ = 0;
  double tol_ = kValidationTol;
};

inline std::size_t flat_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * n + j;
}

// Row-major vec of an n x n matrix, and its inverse.
std::vector<cplx> flatten(const ComplexMatrix& m);
ComplexMatrix unflatten(std::span<const cplx> v, std::size_t n);

// Y_{jl} = sum_i m_{(i,j),(i,l)} for an n^2 x n^2 matrix.
ComplexMatrix outer_partial_trace(const ComplexMatrix& m, std::size_t n);
// I_n (x) y
ComplexMatrix identity_kron(std::size_t n, const ComplexMatrix& y);
// Orthogonal (Frobenius) projection onto {m : outer_partial_trace(m) = I}.
ComplexMatrix project_trace_preserving(const ComplexMatrix& m, std::size_t n);

// Conditions, in order: Hermiticity, trace preservation (largest deviation
// of outer_partial_trace from I), positivity, and the 2x2 principal minor
// condition chi_aa chi_bb >= |chi_ab|^2.
std::vector<ConditionCheck> chi_checks(const ComplexMatrix& m, std::size_t n,
                                       double tol = kValidationTol);

// Throws kDimensionMismatch, kNotHermitian, kTraceConditionViolation or
// kNotPositive.
ChiMatrix validate_chi(const ComplexMatrix& m, std::size_t n,
                       double tol = kValidationTol);

ChiMatrix kraus_to_chi(const KrausChannel& ch);

// E_k = sqrt(lambda_k) unflatten(v_k) for every eigenpair with
// lambda_k > kKrausRankTol.
KrausChannel chi_to_kraus(const ChiMatrix& chi);

// sum_{ab} chi_ab E~_a rho E~_b^dagger with E~ the matrix units.
DensityMatrix apply_chi(const ChiMatrix& chi, const DensityMatrix& rho);

// I / n: the channel rho -> tr(rho) I / n. Strictly positive definite.
ChiMatrix maximally_mixing_chi(std::size_t n);

// t * a + (1 - t) * b, validated.
ChiMatrix mix(const ChiMatrix& a, const ChiMatrix& b, double t,
              double tol = kValidationTol);

}  // namespace qgame::quantum

#endif  // QGAME_QUANTUM_CHI_HPP_
