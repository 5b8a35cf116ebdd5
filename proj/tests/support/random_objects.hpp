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

#ifndef QGAME_TESTS_SUPPORT_RANDOM_OBJECTS_HPP_
#define QGAME_TESTS_SUPPORT_RANDOM_OBJECTS_HPP_

// Random inputs for property tests. Normalization (S^{-1/2}, QR) goes
// through Eigen so the generators do not lean on the code under test.

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "qgame/game/quantum_game.hpp"
#include "qgame/quantum/chi.hpp"
#include "qgame/rng.hpp"

namespace qgame::testing {

using linalg::ComplexMatrix;
using linalg::cplx;
using EMatrix = Eigen::MatrixXcd;

inline cplx gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

inline EMatrix ginibre(std::size_t dim, Rng& rng) {
  EMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = gaussian(rng);
  return m;
}

inline ComplexMatrix to_qgame(const EMatrix& m) {
  std::vector<cplx> v;
  v.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return ComplexMatrix(static_cast<std::size_t>(m.rows()), std::move(v));
}

inline EMatrix to_eigen(const ComplexMatrix& m) {
  EMatrix e(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) e(r, c) = m(r, c);
  return e;
}

inline ComplexMatrix random_hermitian(std::size_t dim, Rng& rng,
                                      double scale = 1.0) {
  const EMatrix g = ginibre(dim, rng);
  return to_qgame(scale * 0.5 * (g + g.adjoint()));
}

// Haar-ish unitary from the QR of a Ginibre matrix with phases fixed.
inline ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const EMatrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<EMatrix> qr(g);
  EMatrix q = qr.householderQ();
  const EMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  return to_qgame(q);
}

// Mixed state of the given rank: G G^dagger / tr.
inline ComplexMatrix random_density_matrix(std::size_t dim, Rng& rng,
                                           std::size_t rank = 0) {
  if (rank == 0) rank = dim;
  EMatrix g(dim, rank);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < rank; ++c) g(r, c) = gaussian(rng);
  EMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return to_qgame(rho);
}

// E_k = G_k S^{-1/2} with S = sum G_k^dagger G_k, so sum E_k^dagger E_k = I.
inline std::vector<ComplexMatrix> random_kraus_ops(std::size_t dim,
                                                   std::size_t count, Rng& rng) {
  std::vector<EMatrix> gs;
  EMatrix s = EMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < count; ++k) {
    gs.push_back(ginibre(dim, rng));
    s += gs.back().adjoint() * gs.back();
  }
  Eigen::SelfAdjointEigenSolver<EMatrix> es(s);
  const EMatrix inv_sqrt = es.operatorInverseSqrt();
  std::vector<ComplexMatrix> ops;
  for (const EMatrix& g : gs) ops.push_back(to_qgame(g * inv_sqrt));
  return ops;
}

inline quantum::KrausChannel random_channel(std::size_t dim, Rng& rng,
                                            std::size_t max_rank = 4) {
  const std::size_t count = 1 + static_cast<std::size_t>(rng() % max_rank);
  return quantum::validate_kraus(random_kraus_ops(dim, count, rng));
}

inline quantum::ChiMatrix random_chi(std::size_t dim, Rng& rng,
                                     std::size_t max_rank = 4) {
  return quantum::kraus_to_chi(random_channel(dim, rng, max_rank));
}

inline game::QuantumGame random_game(std::size_t n1, std::size_t n2, Rng& rng) {
  const std::size_t d = n1 * n2;
  return game::make_game(quantum::validate_density(random_density_matrix(d, rng)),
                         random_hermitian(d, rng), random_hermitian(d, rng), n1,
                         n2);
}

}  // namespace qgame::testing

#endif  // QGAME_TESTS_SUPPORT_RANDOM_OBJECTS_HPP_
