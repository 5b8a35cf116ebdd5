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

#ifndef QGAME_KERNELS_KERNELS_HPP_
#define QGAME_KERNELS_KERNELS_HPP_

// Dense complex inner loops used by the matrix, tensor and solver code.
//
// Each kernel set is a table of plain function pointers. The scalar table is
// the reference; vectorized tables must agree with it to rounding (they sum
// in a different order, so agreement is not bitwise). The active table is
// picked once at first use from the CPU features, and QGAME_KERNELS=scalar
// or QGAME_KERNELS=avx2 forces a choice.

#include <complex>
#include <cstddef>
#include <string_view>

namespace qgame::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;
  // sum_k a[k] * b[k]
  cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);
  // sum_k conj(a[k]) * b[k]
  cplx (*dotc)(const cplx* a, const cplx* b, std::size_t n);
  // y[k] += alpha * x[k]
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // c = a * b for row-major n x n matrices; c must not alias a or b.
  void (*gemm)(const cplx* a, const cplx* b, cplx* c, std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the build has no AVX2 variant or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

const KernelTable& active_kernels();

}  // namespace qgame::kernels

#endif  // QGAME_KERNELS_KERNELS_HPP_
