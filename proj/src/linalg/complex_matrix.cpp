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

#include "qgame/linalg/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgame/errors.hpp"
#include "qgame/kernels/kernels.hpp"

namespace qgame::linalg {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0 || entries_.size() != dim_ * dim_) {
    throw Error(ErrorKind::kNotSquare,
                "expected " + std::to_string(dim_ * dim_) +
                    " entries for a square matrix of dimension " +
                    std::to_string(dim_) + ", got " +
                    std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k].real()) ||
        !std::isfinite(entries_[k].imag())) {
      throw Error(ErrorKind::kNonFinite,
                  "entry (" + std::to_string(k / dim_) + ", " +
                      std::to_string(k % dim_) + ") is not finite");
    }
  }
}

ComplexMatrix ComplexMatrix::zeros(std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::kNotSquare, "dimension must be positive");
  return ComplexMatrix(Unchecked{}, dim, std::vector<cplx>(dim * dim));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m = zeros(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m = zeros(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t row,
                                  std::size_t col) {
  if (row >= dim || col >= dim) {
    throw Error(ErrorKind::kDimensionMismatch,
                "matrix unit index out of range");
  }
  ComplexMatrix m = zeros(dim);
  m(row, col) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  std::vector<std::vector<cplx>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

ComplexMatrix ComplexMatrix::from_rows(
    const std::vector<std::vector<cplx>>& rows) {
  const std::size_t dim = rows.size();
  std::vector<cplx> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) {
      throw Error(ErrorKind::kNotSquare,
                  "row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(dim));
    }
    entries.insert(entries.end(), rows[r].begin(), rows[r].end());
  }
  return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out = zeros(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out = zeros(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (cplx& z : out.entries_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  ComplexMatrix out = zeros(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst,
                       std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  return hermiticity_residual() <= tol;
}

double ComplexMatrix::max_abs() const {
  double worst = 0.0;
  for (const cplx& z : entries_) worst = std::max(worst, std::abs(z));
  return worst;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(
      kernels::active_kernels().dotc(entries_.data(), entries_.data(),
                                     entries_.size())
          .real());
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (dim_ != other.dim_)
    throw Error(ErrorKind::kDimensionMismatch, "matrix sum of unequal sizes");
  kernels::active_kernels().axpy(1.0, other.entries_.data(), entries_.data(),
                                 entries_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (dim_ != other.dim_)
    throw Error(ErrorKind::kDimensionMismatch,
                "matrix difference of unequal sizes");
  kernels::active_kernels().axpy(-1.0, other.entries_.data(), entries_.data(),
                                 entries_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (cplx& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::kDimensionMismatch,
                "matrix product of unequal sizes");
  ComplexMatrix c = ComplexMatrix::zeros(a.dim());
  kernels::active_kernels().gemm(a.data().data(), b.data().data(),
                                 c.data().data(), a.dim());
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out = ComplexMatrix::zeros(na * nb);
  for (std::size_t ar = 0; ar < na; ++ar)
    for (std::size_t ac = 0; ac < na; ++ac) {
      const cplx s = a(ar, ac);
      if (s == cplx(0.0, 0.0)) continue;
      for (std::size_t br = 0; br < nb; ++br)
        for (std::size_t bc = 0; bc < nb; ++bc)
          out(ar * nb + br, ac * nb + bc) = s * b(br, bc);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::kDimensionMismatch,
                "cannot compare matrices of dimension " +
                    std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::kDimensionMismatch,
                "trace of product of unequal sizes");
  const ComplexMatrix bt = b.transpose();
  return kernels::active_kernels().dot(a.data().data(), bt.data().data(),
                                       a.data().size());
}

ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& m) {
  return a * m * a.adjoint();
}

}  // namespace qgame::linalg
