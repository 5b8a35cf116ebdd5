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

#ifndef QGAME_LINALG_COMPLEX_MATRIX_HPP_
#define QGAME_LINALG_COMPLEX_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qgame::linalg {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Values are immutable in spirit:
// every operation returns a new matrix. Entries are guaranteed finite for
// matrices built through the checked constructors.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  // Throws kNotSquare unless entries.size() == dim * dim (dim > 0) and
  // kNonFinite on NaN/Inf.
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix zeros(std::size_t dim);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  // Matrix unit: a single 1 at (row, col), zeros elsewhere (0-based).
  static ComplexMatrix unit(std::size_t dim, std::size_t row, std::size_t col);
  // Rows must all have the same length as the number of rows.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);
  static ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  const cplx& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  cplx& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  std::span<const cplx> data() const noexcept { return entries_; }
  std::span<cplx> data() noexcept { return entries_; }
  std::span<const cplx> row(std::size_t r) const {
    return std::span<const cplx>(entries_).subspan(r * dim_, dim_);
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  // (m + m^dagger) / 2
  ComplexMatrix hermitian_part() const;
  cplx trace() const;

  // Largest entry of |m - m^dagger|.
  double hermiticity_residual() const;
  bool is_hermitian(double tol) const;
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  struct Unchecked {};
  ComplexMatrix(Unchecked, std::size_t dim, std::vector<cplx> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  std::size_t dim_ = 0;
  std::vector<cplx> entries_;
};

// Kronecker product; result dim = a.dim() * b.dim().
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entrywise |a - b|. Throws kDimensionMismatch on differing dims.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// tr(a * b) without forming the product.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

// a * m * a^dagger
ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& m);

}  // namespace qgame::linalg

#endif  // QGAME_LINALG_COMPLEX_MATRIX_HPP_
