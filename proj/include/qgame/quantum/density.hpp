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

#ifndef QGAME_QUANTUM_DENSITY_HPP_
#define QGAME_QUANTUM_DENSITY_HPP_

#include <optional>
#include <vector>

#include "qgame/linalg/complex_matrix.hpp"
#include "qgame/quantum/checks.hpp"
#include "qgame/tolerances.hpp"

namespace qgame::quantum {

using linalg::ComplexMatrix;
using linalg::cplx;

// A validated quantum state: unit trace, Hermitian and positive
// semidefinite within the tolerance it was validated at.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  // Number of qubits when dim is a power of two.
  std::optional<std::size_t> qubits() const;

 private:
  friend DensityMatrix validate_density(const ComplexMatrix&, double);
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}

  ComplexMatrix matrix_;
};

// Conditions, in order: unit trace, Hermiticity, positivity.
std::vector<ConditionCheck> density_checks(const ComplexMatrix& m,
                                           double tol = kValidationTol);

// Throws kTraceNotOne, kNotHermitian or kNotPositive (first failure wins).
DensityMatrix validate_density(const ComplexMatrix& m,
                               double tol = kValidationTol);

}  // namespace qgame::quantum

#endif  // QGAME_QUANTUM_DENSITY_HPP_
