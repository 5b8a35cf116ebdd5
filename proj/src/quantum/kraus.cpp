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

#include "qgame/quantum/kraus.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace qgame::quantum {
namespace {

void check_dims(std::span<const ComplexMatrix> ops, std::string_view what) {
  if (ops.empty())
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("{} needs at least one operator", what));
  for (std::size_t k = 1; k < ops.size(); ++k) {
    if (ops[k].dim() != ops[0].dim()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  fmt::format("{} operator {} has dimension {}, expected {}",
                              what, k, ops[k].dim(), ops[0].dim()));
    }
  }
}

// Trace error of a channel output is bounded by dim * (entrywise
// completeness error); positivity is exact up to rounding.
double output_tolerance(std::size_t dim, double channel_tol) {
  return std::max(kValidationTol, static_cast<double>(dim) * channel_tol);
}

}  // namespace

ComplexMatrix completeness_sum(std::span<const ComplexMatrix> ops) {
  ComplexMatrix sum = ComplexMatrix::zeros(ops.front().dim());
  for (const ComplexMatrix& e : ops) sum += e.adjoint() * e;
  return sum;
}

KrausChannel validate_kraus(std::vector<ComplexMatrix> ops, double tol) {
  check_dims(ops, "Kraus channel");
  const ComplexMatrix deviation =
      completeness_sum(ops) - ComplexMatrix::identity(ops[0].dim());
  if (deviation.max_abs() > tol) {
    const double norm = deviation.frobenius_norm();
    throw Error(ErrorKind::kCompletenessViolation,
                fmt::format("sum_k E_k^dagger E_k deviates from I by {:.3e} "
                            "(Frobenius), largest entry {:.3e}",
                            norm, deviation.max_abs()),
                norm);
  }
  return KrausChannel(std::move(ops), tol);
}

KrausChannel unitary_channel(const ComplexMatrix& u, double tol) {
  return validate_kraus({u}, tol);
}

KrausChannel product_channel(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const ComplexMatrix& e : a.operators())
    for (const ComplexMatrix& f : b.operators()) ops.push_back(linalg::kron(e, f));
  return KrausChannel(std::move(ops), a.tolerance() + b.tolerance());
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("channel acts on dimension {}, state has {}",
                            ch.dim(), rho.dim()));
  }
  ComplexMatrix out = ComplexMatrix::zeros(rho.dim());
  for (const ComplexMatrix& e : ch.operators())
    out += linalg::sandwich(e, rho.matrix());
  return validate_density(out.hermitian_part(),
                          output_tolerance(rho.dim(), ch.tolerance()));
}

DensityMatrix apply_product_channel(const KrausChannel& a,
                                    const KrausChannel& b,
                                    const DensityMatrix& rho) {
  if (a.dim() * b.dim() != rho.dim()) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("channels act on {} x {}, state has dimension {}",
                            a.dim(), b.dim(), rho.dim()));
  }
  return apply_channel(product_channel(a, b), rho);
}

}  // namespace qgame::quantum
