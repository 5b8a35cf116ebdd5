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

#ifndef QGAME_QUANTUM_POVM_HPP_
#define QGAME_QUANTUM_POVM_HPP_

#include <span>
#include <vector>

#include "qgame/quantum/density.hpp"
#include "qgame/rng.hpp"

namespace qgame::quantum {

// Measurement {M_k} with sum_k M_k^dagger M_k = I. Outcome k has
// probability tr(M_k^dagger M_k rho).
class Povm {
 public:
  std::span<const ComplexMatrix> elements() const noexcept {
    return elements_;
  }
  // M_k^dagger M_k
  std::span<const ComplexMatrix> effects() const noexcept { return effects_; }
  std::size_t outcomes() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return elements_.front().dim(); }

 private:
  friend Povm validate_povm(std::vector<ComplexMatrix>, double);
  Povm(std::vector<ComplexMatrix> elements, std::vector<ComplexMatrix> effects)
      : elements_(std::move(elements)), effects_(std::move(effects)) {}

  std::vector<ComplexMatrix> elements_;
  std::vector<ComplexMatrix> effects_;
};

// Only the completeness sum is checked.
Povm validate_povm(std::vector<ComplexMatrix> elements,
                   double tol = kValidationTol);

std::vector<double> measure_probs(const Povm& povm, const DensityMatrix& rho);

// Inverse-CDF draw from a probability vector. Negative rounding noise is
// treated as zero.
std::size_t sample_index(std::span<const double> probs, Rng& rng);

std::size_t sample_outcome(const Povm& povm, const DensityMatrix& rho,
                           Rng& rng);

}  // namespace qgame::quantum

#endif  // QGAME_QUANTUM_POVM_HPP_
