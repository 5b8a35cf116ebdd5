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

#include <gtest/gtest.h>

#include <cmath>

#include "qgame/errors.hpp"
#include "qgame/linalg/hermitian_eigen.hpp"
#include "qgame/quantum/chi.hpp"
#include "qgame/quantum/povm.hpp"
#include "random_objects.hpp"

namespace qgame::quantum {
namespace {

template <typename F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no qgame::Error thrown";
  return Error(ErrorKind::kUsageError, "none");
}

const cplx kI(0.0, 1.0);

TEST(Density, AcceptsValidStates) {
  Rng rng(31);
  for (std::size_t d : {1u, 2u, 4u, 6u}) {
    const DensityMatrix rho = validate_density(testing::random_density_matrix(d, rng));
    EXPECT_EQ(rho.dim(), d);
  }
  EXPECT_EQ(validate_density(ComplexMatrix::unit(4, 0, 0)).qubits(), 2u);
  EXPECT_FALSE(validate_density(ComplexMatrix::unit(3, 0, 0)).qubits());
}

TEST(Density, ReportsFirstViolationWithResidual) {
  ComplexMatrix m = ComplexMatrix::unit(2, 0, 0);
  m(0, 0) = 0.9;
  const Error e = error_of([&] { validate_density(m); });
  EXPECT_EQ(e.kind(), ErrorKind::kTraceNotOne);
  ASSERT_TRUE(e.residual());
  EXPECT_NEAR(*e.residual(), 0.1, 1e-15);

  const ComplexMatrix nh = ComplexMatrix::from_rows({{0.5, 0.1}, {0.0, 0.5}});
  EXPECT_EQ(error_of([&] { validate_density(nh); }).kind(), ErrorKind::kNotHermitian);

  const ComplexMatrix neg = ComplexMatrix::from_rows({{1.5, 0}, {0, -0.5}});
  const Error np = error_of([&] { validate_density(neg); });
  EXPECT_EQ(np.kind(), ErrorKind::kNotPositive);
  EXPECT_NEAR(*np.residual(), 0.5, 1e-12);
}

TEST(Density, ToleranceIsRespected) {
  ComplexMatrix m = ComplexMatrix::unit(2, 0, 0);
  m(1, 1) = 1e-7;
  EXPECT_THROW(validate_density(m), Error);
  EXPECT_NO_THROW(validate_density(m, 1e-6));
}

TEST(Kraus, CompletenessAndDimensions) {
  const ComplexMatrix half = ComplexMatrix::identity(2) * cplx(0.5);
  const Error e = error_of([&] { validate_kraus({half}); });
  EXPECT_EQ(e.kind(), ErrorKind::kCompletenessViolation);
  // I - I/4 on the diagonal: Frobenius norm sqrt(2) * 3/4.
  EXPECT_NEAR(*e.residual(), std::sqrt(2.0) * 0.75, 1e-12);
  EXPECT_EQ(error_of([] {
              validate_kraus({ComplexMatrix::identity(2), ComplexMatrix::identity(3)});
            }).kind(),
            ErrorKind::kDimensionMismatch);
  EXPECT_EQ(error_of([] { validate_kraus({}); }).kind(), ErrorKind::kDimensionMismatch);
  EXPECT_THROW(unitary_channel(ComplexMatrix::from_rows({{1, 1}, {0, 1}})), Error);
}

TEST(Kraus, ApplyChannelPreservesStates) {
  Rng rng(32);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const KrausChannel ch = testing::random_channel(n, rng);
    const DensityMatrix rho = validate_density(testing::random_density_matrix(n, rng));
    const DensityMatrix out = apply_channel(ch, rho);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_TRUE(linalg::is_psd(out.matrix()));
  }
}

TEST(Kraus, ProductChannelActsFactorwise) {
  Rng rng(33);
  const KrausChannel a = testing::random_channel(2, rng);
  const KrausChannel b = testing::random_channel(3, rng);
  const ComplexMatrix r1 = testing::random_density_matrix(2, rng);
  const ComplexMatrix r2 = testing::random_density_matrix(3, rng);
  const DensityMatrix joint = validate_density(linalg::kron(r1, r2));
  const DensityMatrix out = apply_product_channel(a, b, joint);
  const ComplexMatrix expected =
      linalg::kron(apply_channel(a, validate_density(r1)).matrix(),
                   apply_channel(b, validate_density(r2)).matrix());
  EXPECT_LT(linalg::max_abs_diff(out.matrix(), expected), 1e-12);
  EXPECT_EQ(product_channel(a, b).size(), a.size() * b.size());
}

TEST(Chi, UnitaryHasRankOneChi) {
  // Bit flip: vec(X) = (0,1,1,0), chi = vec vec^dagger.
  const ChiMatrix chi =
      kraus_to_chi(unitary_channel(ComplexMatrix::from_rows({{0, 1}, {1, 0}})));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const double expected = (a == 1 || a == 2) && (b == 1 || b == 2) ? 1.0 : 0.0;
      EXPECT_EQ(chi.matrix()(a, b), cplx(expected));
    }
  EXPECT_EQ(flat_index(1, 0, 2), 2u);
}

TEST(Chi, ValidationReportsEachCondition) {
  ComplexMatrix m = ComplexMatrix::zeros(4);
  m(0, 0) = 1.0;  // Tr_1 = diag(1, 0)
  EXPECT_EQ(error_of([&] { validate_chi(m, 2); }).kind(),
            ErrorKind::kTraceConditionViolation);
  ComplexMatrix nh = ComplexMatrix::identity(4) * cplx(0.5);
  nh(0, 1) = 0.1;
  EXPECT_EQ(error_of([&] { validate_chi(nh, 2); }).kind(), ErrorKind::kNotHermitian);
  // Trace-preserving but indefinite: diag(1.5, 1, -0.5, 0).
  ComplexMatrix ind = ComplexMatrix::zeros(4);
  ind(0, 0) = 1.5;
  ind(1, 1) = 1.0;
  ind(2, 2) = -0.5;
  EXPECT_EQ(error_of([&] { validate_chi(ind, 2); }).kind(), ErrorKind::kNotPositive);
  EXPECT_EQ(error_of([] { validate_chi(ComplexMatrix::identity(3), 2); }).kind(),
            ErrorKind::kDimensionMismatch);
}

TEST(Chi, ApplyChiMatchesKrausAction) {
  Rng rng(34);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const KrausChannel ch = testing::random_channel(n, rng);
    const DensityMatrix rho = validate_density(testing::random_density_matrix(n, rng));
    EXPECT_LT(linalg::max_abs_diff(apply_chi(kraus_to_chi(ch), rho).matrix(),
                                   apply_channel(ch, rho).matrix()),
              1e-12);
  }
}

TEST(Chi, RoundTripPreservesChiMatrix) {
  Rng rng(35);
  for (int k = 0; k < 40; ++k) {
    const ChiMatrix chi = testing::random_chi(2 + static_cast<std::size_t>(k % 2), rng);
    const ChiMatrix again = kraus_to_chi(chi_to_kraus(chi));
    EXPECT_LT(linalg::max_abs_diff(chi.matrix(), again.matrix()), 1e-12);
  }
}

TEST(Chi, AffineProjectionIsOrthogonal) {
  Rng rng(36);
  for (std::size_t n : {2u, 3u}) {
    const ComplexMatrix m = testing::random_hermitian(n * n, rng);
    const ComplexMatrix p = project_trace_preserving(m, n);
    EXPECT_LT(linalg::max_abs_diff(outer_partial_trace(p, n),
                                   ComplexMatrix::identity(n)),
              1e-13);
    // Idempotent, and m - p is orthogonal to the subspace.
    EXPECT_LT(linalg::max_abs_diff(project_trace_preserving(p, n), p), 1e-13);
    // Any direction d with Tr_1(d) = 0 stays inside the subspace.
    ComplexMatrix d = testing::random_hermitian(n * n, rng);
    d = d - identity_kron(n, outer_partial_trace(d, n) * cplx(1.0 / n));
    EXPECT_LT(std::abs(linalg::trace_of_product((m - p).adjoint(), d)), 1e-12);
  }
}

TEST(Chi, MaximallyMixingAndMix) {
  const ChiMatrix mm = maximally_mixing_chi(3);
  EXPECT_EQ(mm.n(), 3u);
  Rng rng(37);
  const DensityMatrix rho = validate_density(testing::random_density_matrix(3, rng));
  EXPECT_LT(linalg::max_abs_diff(apply_chi(mm, rho).matrix(),
                                 ComplexMatrix::identity(3) * cplx(1.0 / 3)),
            1e-14);
  const ChiMatrix other = testing::random_chi(3, rng);
  EXPECT_NO_THROW(mix(mm, other, 0.3));
  EXPECT_THROW(mix(mm, maximally_mixing_chi(2), 0.5), Error);
}

TEST(Povm, ProbabilitiesAndSampling) {
  // Computational-basis measurement; outcome 0 has probability 1/4.
  std::vector<ComplexMatrix> elems = {ComplexMatrix::unit(2, 0, 0),
                                      ComplexMatrix::unit(2, 1, 1)};
  const Povm povm = validate_povm(elems);
  const DensityMatrix rho =
      validate_density(ComplexMatrix::from_rows({{0.25, 0.0}, {0.0, 0.75}}));
  const auto probs = measure_probs(povm, rho);
  EXPECT_DOUBLE_EQ(probs[0], 0.25);
  EXPECT_DOUBLE_EQ(probs[1], 0.75);
  Rng rng(38);
  int zeros = 0;
  const int draws = 200000;
  for (int k = 0; k < draws; ++k) zeros += sample_outcome(povm, rho, rng) == 0;
  // 0.25 +- 5 sigma, sigma = sqrt(.25 * .75 / draws) ~ 9.7e-4
  EXPECT_NEAR(static_cast<double>(zeros) / draws, 0.25, 5e-3);
  EXPECT_EQ(error_of([] { validate_povm({ComplexMatrix::unit(2, 0, 0)}); }).kind(),
            ErrorKind::kCompletenessViolation);
}

TEST(Povm, SampleIndexIgnoresNegativeNoise) {
  Rng rng(39);
  const std::vector<double> probs = {-1e-17, 1.0, 0.0};
  for (int k = 0; k < 1000; ++k) EXPECT_EQ(sample_index(probs, rng), 1u);
}

}  // namespace
}  // namespace qgame::quantum
