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

#include "qgame/quantum/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fmt/format.h>

#include "qgame/linalg/hermitian_eigen.hpp"

namespace qgame::quantum {

void throw_first_failure(const std::vector<ConditionCheck>& checks,
                         const std::string& what) {
  for (const ConditionCheck& c : checks) {
    if (!c.passed()) {
      throw Error(c.kind,
                  fmt::format("{}: {} violated (residual {:.3e}, tolerance "
                              "{:.1e})",
                              what, c.name, c.residual, c.tolerance),
                  c.residual);
    }
  }
}

bool all_passed(const std::vector<ConditionCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ConditionCheck& c) { return c.passed(); });
}

std::optional<std::size_t> DensityMatrix::qubits() const {
  const std::size_t d = dim();
  if (!std::has_single_bit(d)) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(d));
}

std::vector<ConditionCheck> density_checks(const ComplexMatrix& m,
                                           double tol) {
  const double herm_tol = std::max(kHermitianTol, tol);
  const double herm = m.hermiticity_residual();
  // Positivity is judged on the Hermitian part so that it can be reported
  // even when the Hermiticity check fails.
  const double lowest = linalg::min_eigenvalue(m.hermitian_part());
  return {
      {ErrorKind::kTraceNotOne, "trace = 1", std::abs(m.trace() - 1.0), tol},
      {ErrorKind::kNotHermitian, "Hermitian", herm, herm_tol},
      {ErrorKind::kNotPositive, "positive semidefinite",
       std::max(0.0, -lowest), tol},
  };
}

DensityMatrix validate_density(const ComplexMatrix& m, double tol) {
  throw_first_failure(density_checks(m, tol), "density matrix");
  return DensityMatrix(m);
}

}  // namespace qgame::quantum
