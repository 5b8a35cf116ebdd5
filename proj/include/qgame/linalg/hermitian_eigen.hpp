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

#ifndef QGAME_LINALG_HERMITIAN_EIGEN_HPP_
#define QGAME_LINALG_HERMITIAN_EIGEN_HPP_

#include <vector>

#include "qgame/linalg/complex_matrix.hpp"
#include "qgame/tolerances.hpp"

namespace qgame::linalg {

struct HermitianEigen {
  // Sorted descending.
  std::vector<double> values;
  // Column k is the unit eigenvector for values[k]. Order within a block of
  // equal eigenvalues is unspecified.
  ComplexMatrix vectors;
};

// Cyclic complex Jacobi sweeps. Throws kNotHermitian when
// max|m - m^dagger| > hermitian_tol, and kNoConvergence when the
// off-diagonal mass has not vanished within kJacobiSweepBudget sweeps.
HermitianEigen hermitian_eigen(const ComplexMatrix& m,
                               double hermitian_tol = kHermitianTol);

// V diag(values) V^dagger
ComplexMatrix reconstruct(const HermitianEigen& eig);

// Smallest and largest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& m,
                      double hermitian_tol = kHermitianTol);
double max_eigenvalue(const ComplexMatrix& m,
                      double hermitian_tol = kHermitianTol);

// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const ComplexMatrix& m, double tol = kPsdTol,
            double hermitian_tol = kHermitianTol);

// Nearest PSD matrix in Frobenius norm: negative eigenvalues clipped to 0.
ComplexMatrix project_psd(const ComplexMatrix& m,
                          double hermitian_tol = kHermitianTol);

}  // namespace qgame::linalg

#endif  // QGAME_LINALG_HERMITIAN_EIGEN_HPP_
