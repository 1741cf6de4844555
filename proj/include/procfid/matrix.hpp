// Copyright 2026 The procfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace procfid {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. Shapes are always at least 1×1 and every
/// entry is finite when constructed from external data.
class ComplexMatrix {
 public:
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major `entries`; rejects size mismatch and
  /// non-finite values.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Literal construction, one initializer list per row.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::string shape() const;

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }

  ComplexVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> v);

  /// Gathers the submatrix at the given row and column indices.
  ComplexMatrix gather(std::span<const std::size_t> row_idx,
                       std::span<const std::size_t> col_idx) const;

  bool all_finite() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix identity(std::size_t n);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
/// Tensor product; (a ⊗ b)(i·rb + k, j·cb + l) = a(i,j)·b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// a in the top-left corner, b in the bottom-right, zeros elsewhere.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);
/// C†C, with the lower triangle written as the conjugate of the upper so the
/// result is exactly Hermitian.
ComplexMatrix gram(const ComplexMatrix& c);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

ComplexVector matvec(const ComplexMatrix& a, std::span<const Complex> v);
/// ⟨u|v⟩ = Σ conj(u_k) v_k.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm2(std::span<const Complex> v);

/// ‖M†M − I‖_F; requires a square matrix.
double unitarity_residual(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol);
/// ‖A − A†‖_F / max(1, ‖A‖_F); requires a square matrix.
double hermiticity_residual(const ComplexMatrix& a);

}  // namespace procfid
