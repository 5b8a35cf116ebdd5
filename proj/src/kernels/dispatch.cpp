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

#include <cstdlib>
#include <string>

#include "qgame/errors.hpp"
#include "qgame/kernels/kernels.hpp"

namespace qgame::kernels {

#if defined(QGAME_HAVE_AVX2_KERNELS)
// Defined in avx2.cpp.
const KernelTable& avx2_kernel_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(QGAME_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select_kernels() {
  const char* forced = std::getenv("QGAME_KERNELS");
  if (forced != nullptr && *forced != '\0') {
    const std::string choice(forced);
    if (choice == "scalar") return scalar_kernels();
    if (choice == "avx2") {
      if (const KernelTable* t = avx2_kernels()) return *t;
      throw Error(ErrorKind::kUsageError,
                  "QGAME_KERNELS=avx2 but AVX2 kernels are unavailable");
    }
    throw Error(ErrorKind::kUsageError,
                "QGAME_KERNELS must be 'scalar' or 'avx2', got '" + choice +
                    "'");
  }
  if (const KernelTable* t = avx2_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(QGAME_HAVE_AVX2_KERNELS)
  static const bool supported = cpu_has_avx2();
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace qgame::kernels
