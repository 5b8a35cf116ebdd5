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

#include "qgame/quantum/povm.hpp"

#include <fmt/format.h>

#include "qgame/linalg/complex_matrix.hpp"

namespace qgame::quantum {

Povm validate_povm(std::vector<ComplexMatrix> elements, double tol) {
  if (elements.empty())
    throw Error(ErrorKind::kDimensionMismatch, "POVM needs at least one element");
  std::vector<ComplexMatrix> effects;
  effects.reserve(elements.size());
  ComplexMatrix sum = ComplexMatrix::zeros(elements[0].dim());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].dim() != elements[0].dim()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  fmt::format("POVM element {} has dimension {}, expected {}",
                              k, elements[k].dim(), elements[0].dim()));
    }
    effects.push_back(elements[k].adjoint() * elements[k]);
    sum += effects.back();
  }
  const ComplexMatrix deviation =
      sum - ComplexMatrix::identity(elements[0].dim());
  if (deviation.max_abs() > tol) {
    throw Error(ErrorKind::kCompletenessViolation,
                fmt::format("sum_k M_k^dagger M_k deviates from I by {:.3e}",
                            deviation.max_abs()),
                deviation.max_abs());
  }
  return Povm(std::move(elements), std::move(effects));
}

std::vector<double> measure_probs(const Povm& povm, const DensityMatrix& rho) {
  if (povm.dim() != rho.dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("POVM acts on dimension {}, state has {}",
                            povm.dim(), rho.dim()));
  }
  std::vector<double> probs;
  probs.reserve(povm.outcomes());
  for (const ComplexMatrix& effect : povm.effects())
    probs.push_back(linalg::trace_of_product(effect, rho.matrix()).real());
  return probs;
}

std::size_t sample_index(std::span<const double> probs, Rng& rng) {
  double total = 0.0;
  for (double p : probs) total += p > 0.0 ? p : 0.0;
  const double u = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] <= 0.0) continue;
    cumulative += probs[k];
    last_positive = k;
    if (u < cumulative) return k;
  }
  return last_positive;
}

std::size_t sample_outcome(const Povm& povm, const DensityMatrix& rho,
                           Rng& rng) {
  const std::vector<double> probs = measure_probs(povm, rho);
  return sample_index(probs, rng);
}

}  // namespace qgame::quantum
