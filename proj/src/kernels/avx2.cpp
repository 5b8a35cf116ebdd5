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

// AVX2 + FMA kernels. This file is compiled with -mavx2 -mfma and is only
// reached after the dispatcher has confirmed CPU support.
//
// A __m256d holds two complex numbers as [re0, im0, re1, im1].

#include <immintrin.h>

#include <algorithm>

#include "qgame/kernels/kernels.hpp"

namespace qgame::kernels {
namespace {

inline const double* as_doubles(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// Sums the two complex lanes of v.
inline cplx hsum(__m256d v) {
  const __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v),
                               _mm256_extractf128_pd(v, 1));
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

// Accumulates a*re(b) and a*im(b) lane-wise over the vector part and
// returns the number of complex elements consumed.
inline std::size_t accumulate_products(const cplx* a, const cplx* b,
                                       std::size_t n, cplx& a_bre,
                                       cplx& a_bim) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d va = _mm256_loadu_pd(as_doubles(a + k));
    const __m256d vb = _mm256_loadu_pd(as_doubles(b + k));
    acc_re = _mm256_fmadd_pd(va, _mm256_movedup_pd(vb), acc_re);
    acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0xF), acc_im);
  }
  a_bre = hsum(acc_re);  // (sum ar*br, sum ai*br)
  a_bim = hsum(acc_im);  // (sum ar*bi, sum ai*bi)
  return k;
}

cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  cplx a_bre;
  cplx a_bim;
  const std::size_t k = accumulate_products(a, b, n, a_bre, a_bim);
  cplx result(a_bre.real() - a_bim.imag(), a_bre.imag() + a_bim.real());
  if (k < n) result += a[k] * b[k];
  return result;
}

cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  cplx a_bre;
  cplx a_bim;
  const std::size_t k = accumulate_products(a, b, n, a_bre, a_bim);
  cplx result(a_bre.real() + a_bim.imag(), a_bim.real() - a_bre.imag());
  if (k < n) result += std::conj(a[k]) * b[k];
  return result;
}

inline void axpy_body(__m256d alpha_re, __m256d alpha_im, cplx alpha,
                      const cplx* x, cplx* y, std::size_t n) {
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d vx = _mm256_loadu_pd(as_doubles(x + k));
    const __m256d swapped = _mm256_permute_pd(vx, 0x5);
    const __m256d prod =
        _mm256_fmaddsub_pd(alpha_re, vx, _mm256_mul_pd(alpha_im, swapped));
    const __m256d vy = _mm256_loadu_pd(as_doubles(y + k));
    _mm256_storeu_pd(as_doubles(y + k), _mm256_add_pd(vy, prod));
  }
  if (k < n) y[k] += alpha * x[k];
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  axpy_body(_mm256_set1_pd(alpha.real()), _mm256_set1_pd(alpha.imag()), alpha,
            x, y, n);
}

void gemm_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t n) {
  std::fill(c, c + n * n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      if (aik == cplx(0.0, 0.0)) continue;
      axpy_body(_mm256_set1_pd(aik.real()), _mm256_set1_pd(aik.imag()), aik,
                b + k * n, c + i * n, n);
    }
  }
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2", dot_avx2, dotc_avx2, axpy_avx2,
                                 gemm_avx2};
  return table;
}

}  // namespace qgame::kernels
