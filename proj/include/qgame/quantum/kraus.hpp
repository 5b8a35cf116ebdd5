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

#ifndef QGAME_QUANTUM_KRAUS_HPP_
#define QGAME_QUANTUM_KRAUS_HPP_

#include <span>
#include <vector>

#include "qgame/quantum/density.hpp"

namespace qgame::quantum {

class ChiMatrix;

// A physical operation {E_k} with sum_k E_k^dagger E_k = I.
class KrausChannel {
 public:
  std::span<const ComplexMatrix> operators() const noexcept { return ops_; }
  std::size_t dim() const noexcept { return ops_.front().dim(); }
  std::size_t size() const noexcept { return ops_.size(); }
  // Tolerance the completeness sum was accepted at; states produced by the
  // channel are validated against a bound derived from it.
  double tolerance() const noexcept { return tol_; }

 private:
  friend KrausChannel validate_kraus(std::vector<ComplexMatrix>, double);
  friend KrausChannel product_channel(const KrausChannel&,
                                      const KrausChannel&);
  friend KrausChannel chi_to_kraus(const ChiMatrix&);
  KrausChannel(std::vector<ComplexMatrix> ops, double tol)
      : ops_(std::move(ops)), tol_(tol) {}

  std::vector<ComplexMatrix> ops_;
  double tol_ = kValidationTol;
};

// sum_k E_k^dagger E_k
ComplexMatrix completeness_sum(std::span<const ComplexMatrix> ops);

// Throws kDimensionMismatch for an empty list or operators of unequal size,
// kCompletenessViolation (residual = Frobenius norm of the deviation from I)
// when any entry of the completeness sum is off by more than tol.
KrausChannel validate_kraus(std::vector<ComplexMatrix> ops,
                            double tol = kValidationTol);

// Single-operator channel {u}; fails unless u is unitary within tol.
KrausChannel unitary_channel(const ComplexMatrix& u,
                             double tol = kValidationTol);

// {E_k (x) F_l} over all pairs.
KrausChannel product_channel(const KrausChannel& a, const KrausChannel& b);

// sum_k E_k rho E_k^dagger
DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

// sum_{k,l} (E_k (x) F_l) rho (E_k (x) F_l)^dagger
DensityMatrix apply_product_channel(const KrausChannel& a,
                                    const KrausChannel& b,
                                    const DensityMatrix& rho);

}  // namespace qgame::quantum

#endif  // QGAME_QUANTUM_KRAUS_HPP_
