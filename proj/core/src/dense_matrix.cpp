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

#include "httn/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "httn/errors.hpp"
#include "httn/pauli.hpp"

namespace httn::numkit {

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim > kMaxDim) {
    throw CapacityError("matrix dimension " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(kMaxDim));
  }
}

DenseMatrix::DenseMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim > kMaxDim) {
    throw CapacityError("matrix dimension " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(kMaxDim));
  }
  if (entries_.size() != dim * dim) {
    throw ContractViolation("entry count does not match dimension");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t dim = rows.size();
  DenseMatrix m(dim);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim) {
      throw ContractViolation("from_rows requires a square matrix");
    }
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      out(c, r) = std::conj((*this)(r, c));
  return out;
}

DenseMatrix DenseMatrix::conjugate() const {
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = std::conj(entries_[i]);
  return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw ContractViolation("dimension mismatch in product");
  DenseMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == 0.0) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::operator*(Complex scalar) const {
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] * scalar;
  return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw ContractViolation("dimension mismatch in sum");
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw ContractViolation("dimension mismatch in difference");
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != dim_) throw ContractViolation("vector length does not match matrix dimension");
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc = 0.0;
    const Complex* row = entries_.data() + r * dim_;
    for (std::size_t c = 0; c < dim_; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : entries_) m = std::max(m, std::abs(v));
  return m;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  if (dim_ != other.dim_) throw ContractViolation("dimension mismatch in comparison");
  double m = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
  return m;
}

bool DenseMatrix::all_finite() const {
  for (const auto& v : entries_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

bool DenseMatrix::is_unitary(double tol) const {
  const DenseMatrix gram = adjoint() * (*this);
  return gram.max_abs_diff(identity(dim_)) <= tol;
}

bool DenseMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.all_finite() || !b.all_finite()) {
    throw ContractViolation("kron requires finite inputs");
  }
  const std::size_t dim = a.dim() * b.dim();
  if (a.dim() == 0 || b.dim() == 0 || dim > kMaxDim) {
    throw CapacityError("kron result dimension " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(kMaxDim));
  }
  DenseMatrix out(dim);
  for (std::size_t ar = 0; ar < a.dim(); ++ar)
    for (std::size_t ac = 0; ac < a.dim(); ++ac) {
      const Complex f = a(ar, ac);
      if (f == 0.0) continue;
      for (std::size_t br = 0; br < b.dim(); ++br)
        for (std::size_t bc = 0; bc < b.dim(); ++bc)
          out(ar * b.dim() + br, ac * b.dim() + bc) = f * b(br, bc);
    }
  return out;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw ContractViolation("inner product length mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

namespace {

DenseMatrix make_pauli(Pauli p) {
  const Complex i(0.0, 1.0);
  switch (p) {
    case Pauli::I: return DenseMatrix::from_rows({{1, 0}, {0, 1}});
    case Pauli::X: return DenseMatrix::from_rows({{0, 1}, {1, 0}});
    case Pauli::Y: return DenseMatrix::from_rows({{0, -i}, {i, 0}});
    case Pauli::Z: return DenseMatrix::from_rows({{1, 0}, {0, -1}});
  }
  throw ContractViolation("invalid Pauli label");
}

}  // namespace

const DenseMatrix& pauli_matrix(Pauli p) {
  static const DenseMatrix mats[4] = {
      make_pauli(Pauli::I), make_pauli(Pauli::X), make_pauli(Pauli::Y),
      make_pauli(Pauli::Z)};
  return mats[static_cast<int>(p)];
}

char pauli_to_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
  }
  throw ContractViolation(std::string("invalid Pauli character '") + c + "'");
}

std::string pauli_string_to_string(const std::vector<Pauli>& labels) {
  std::string s;
  s.reserve(labels.size());
  for (Pauli p : labels) s.push_back(pauli_to_char(p));
  return s;
}

std::vector<Pauli> pauli_string_from_string(const std::string& s) {
  std::vector<Pauli> labels;
  labels.reserve(s.size());
  for (char c : s) labels.push_back(pauli_from_char(c));
  return labels;
}

const DenseMatrix& gate_hadamard() {
  static const DenseMatrix h = [] {
    const double r = 1.0 / std::sqrt(2.0);
    return DenseMatrix::from_rows({{r, r}, {r, -r}});
  }();
  return h;
}

const DenseMatrix& gate_s() {
  static const DenseMatrix s =
      DenseMatrix::from_rows({{1, 0}, {0, Complex(0.0, 1.0)}});
  return s;
}

const DenseMatrix& gate_sdg() {
  static const DenseMatrix s =
      DenseMatrix::from_rows({{1, 0}, {0, Complex(0.0, -1.0)}});
  return s;
}

const DenseMatrix& gate_t() {
  static const DenseMatrix t = DenseMatrix::from_rows(
      {{1, 0}, {0, std::polar(1.0, 3.14159265358979323846 / 4.0)}});
  return t;
}

const DenseMatrix& gate_by_name(const std::string& name) {
  if (name == "I") return pauli_matrix(Pauli::I);
  if (name == "X") return pauli_matrix(Pauli::X);
  if (name == "Y") return pauli_matrix(Pauli::Y);
  if (name == "Z") return pauli_matrix(Pauli::Z);
  if (name == "H") return gate_hadamard();
  if (name == "S") return gate_s();
  if (name == "Sdg") return gate_sdg();
  if (name == "T") return gate_t();
  throw ContractViolation("unknown gate name '" + name + "'");
}

}  // namespace httn::numkit
