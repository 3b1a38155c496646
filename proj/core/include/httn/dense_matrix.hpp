// Copyright 2026 The httn Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace httn::numkit {

using Complex = std::complex<double>;

/// Largest matrix dimension the dense kernels accept (a 12-qubit operator).
inline constexpr std::size_t kMaxDim = 4096;

/// Square complex matrix stored row-major. Carries every operator, unitary,
/// and decomposition factor in the library; dimensions are powers of two for
/// qubit registers but the type itself only requires squareness.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  /// dim x dim zero matrix.
  explicit DenseMatrix(std::size_t dim);

  /// Row-major entries; entries.size() must equal dim * dim.
  DenseMatrix(std::size_t dim, std::vector<Complex> entries);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const { return entries_; }
  Complex* data() { return entries_.data(); }
  const Complex* data() const { return entries_.data(); }

  DenseMatrix adjoint() const;
  DenseMatrix conjugate() const;

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator*(Complex scalar) const;
  DenseMatrix operator+(const DenseMatrix& rhs) const;
  DenseMatrix operator-(const DenseMatrix& rhs) const;

  /// Matrix-vector product M v; v.size() must equal dim().
  std::vector<Complex> apply(std::span<const Complex> v) const;

  /// Largest |entry|.
  double max_abs() const;

  /// Largest |this - other| entry; dimensions must match.
  double max_abs_diff(const DenseMatrix& other) const;

  bool all_finite() const;

  /// max-norm test of M†M = I.
  bool is_unitary(double tol) const;

  /// max-norm test of M = M†.
  bool is_hermitian(double tol) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Kronecker product; result dimension a.dim * b.dim must stay within
/// kMaxDim or a CapacityError is thrown. The left factor occupies the
/// high-order (leftmost) qubit labels.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Inner product <a|b> = sum conj(a_i) b_i.
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace httn::numkit
