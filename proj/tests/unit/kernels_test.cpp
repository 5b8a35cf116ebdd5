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

#include <complex>
#include <vector>

#include "qgame/kernels/kernels.hpp"
#include "qgame/rng.hpp"
#include "random_objects.hpp"

namespace qgame {
namespace {

using kernels::cplx;

std::vector<cplx> random_vector(std::size_t n, Rng& rng) {
  std::vector<cplx> v(n);
  for (auto& z : v) z = testing::gaussian(rng);
  return v;
}

const kernels::KernelTable* vector_table() { return kernels::avx2_kernels(); }

TEST(Kernels, ScalarDotMatchesDefinition) {
  const auto& k = kernels::scalar_kernels();
  const std::vector<cplx> a = {{1, 2}, {3, -1}, {0, 1}};
  const std::vector<cplx> b = {{2, 0}, {1, 1}, {-1, 0}};
  // (1+2i)2 + (3-i)(1+i) + i(-1) = 2+4i + 4+2i - i
  EXPECT_EQ(k.dot(a.data(), b.data(), 3), cplx(6, 5));
  // (1-2i)2 + (3+i)(1+i) + (-i)(-1) = 2-4i + 2+4i + i
  EXPECT_EQ(k.dotc(a.data(), b.data(), 3), cplx(4, 1));
  std::vector<cplx> y = b;
  k.axpy(cplx(0, 1), a.data(), y.data(), 3);
  EXPECT_EQ(y[0], cplx(0, 1));
  EXPECT_EQ(y[1], cplx(2, 4));
  EXPECT_EQ(y[2], cplx(-2, 0));
}

TEST(Kernels, ScalarGemmMatchesEigen) {
  Rng rng(11);
  for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 16u}) {
    const auto a = testing::ginibre(n, rng);
    const auto b = testing::ginibre(n, rng);
    const auto qa = testing::to_qgame(a);
    const auto qb = testing::to_qgame(b);
    std::vector<cplx> c(n * n);
    kernels::scalar_kernels().gemm(qa.data().data(), qb.data().data(), c.data(), n);
    const testing::EMatrix ref = a * b;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col)
        EXPECT_LT(std::abs(c[r * n + col] - ref(r, col)), 1e-12);
  }
}

TEST(Kernels, VectorVariantAgreesWithScalar) {
  const auto* v = vector_table();
  if (v == nullptr) GTEST_SKIP() << "no vector kernels on this machine";
  const auto& s = kernels::scalar_kernels();
  Rng rng(12);
  // Odd lengths exercise the scalar tail of the vector loops.
  for (std::size_t n = 0; n <= 37; ++n) {
    const auto a = random_vector(n, rng);
    const auto b = random_vector(n, rng);
    const double scale = 1e-14 * (static_cast<double>(n) + 1.0);
    EXPECT_LT(std::abs(v->dot(a.data(), b.data(), n) - s.dot(a.data(), b.data(), n)),
              scale) << n;
    EXPECT_LT(std::abs(v->dotc(a.data(), b.data(), n) -
                       s.dotc(a.data(), b.data(), n)),
              scale) << n;
    std::vector<cplx> y1 = b;
    std::vector<cplx> y2 = b;
    const cplx alpha = testing::gaussian(rng);
    v->axpy(alpha, a.data(), y1.data(), n);
    s.axpy(alpha, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LT(std::abs(y1[i] - y2[i]), 1e-14);
  }
  for (std::size_t n = 1; n <= 17; ++n) {
    const auto a = random_vector(n * n, rng);
    const auto b = random_vector(n * n, rng);
    std::vector<cplx> c1(n * n);
    std::vector<cplx> c2(n * n);
    v->gemm(a.data(), b.data(), c1.data(), n);
    s.gemm(a.data(), b.data(), c2.data(), n);
    for (std::size_t i = 0; i < n * n; ++i)
      EXPECT_LT(std::abs(c1[i] - c2[i]), 1e-13 * static_cast<double>(n)) << n;
  }
}

TEST(Kernels, ActiveTableIsOneOfTheKnownOnes) {
  const auto& active = kernels::active_kernels();
  EXPECT_TRUE(active.name == kernels::scalar_kernels().name ||
              (vector_table() != nullptr && active.name == vector_table()->name));
}

}  // namespace
}  // namespace qgame
