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

#include "httn/observable.hpp"

#include <cmath>

#include "httn/errors.hpp"

namespace httn::htncore {

using numkit::DenseMatrix;

SubsystemObservable SubsystemObservable::identity(int qubits) {
  if (qubits < 1) throw ContractViolation("observable needs at least one qubit");
  SubsystemObservable o;
  o.qubits_ = qubits;
  o.identity_ = true;
  o.op_norm_ = 1.0;
  return o;
}

SubsystemObservable SubsystemObservable::from_factors(
    std::vector<DenseMatrix> factors, double tol) {
  if (factors.empty()) throw ContractViolation("observable needs at least one factor");
  SubsystemObservable o;
  o.qubits_ = static_cast<int>(factors.size());
  o.op_norm_ = 1.0;
  for (const auto& f : factors) {
    if (f.dim() != 2) throw ContractViolation("observable factors must be 2x2");
    if (!f.is_hermitian(tol)) {
      throw ContractViolation("observable factors must be Hermitian");
    }
    o.op_norm_ *= numkit::svd(f).opnorm;
  }
  o.factor_eigs_.reserve(factors.size());
  for (const auto& f : factors) o.factor_eigs_.push_back(numkit::eig_hermitian(f, tol));
  o.factors_ = std::move(factors);
  return o;
}

SubsystemObservable SubsystemObservable::from_pauli_string(
    std::span<const numkit::Pauli> labels) {
  std::vector<DenseMatrix> factors;
  factors.reserve(labels.size());
  bool all_identity = true;
  for (numkit::Pauli p : labels) {
    factors.push_back(numkit::pauli_matrix(p));
    all_identity = all_identity && p == numkit::Pauli::I;
  }
  if (all_identity) return identity(static_cast<int>(labels.size()));
  return from_factors(std::move(factors));
}

SubsystemObservable SubsystemObservable::from_matrix(DenseMatrix matrix, double tol) {
  if (!matrix.is_hermitian(tol)) {
    throw ContractViolation("observable matrix must be Hermitian");
  }
  SubsystemObservable o;
  int q = 0;
  while ((std::size_t{1} << q) < matrix.dim()) ++q;
  if ((std::size_t{1} << q) != matrix.dim() || matrix.dim() < 2) {
    throw ContractViolation("observable dimension is not a power of two");
  }
  o.qubits_ = q;
  o.op_norm_ = numkit::svd(matrix).opnorm;
  o.matrix_eig_ = numkit::eig_hermitian(matrix, tol);
  o.matrix_ = std::move(matrix);
  return o;
}

DenseMatrix SubsystemObservable::dense() const {
  if (identity_) return DenseMatrix::identity(std::size_t{1} << qubits_);
  if (matrix_) return *matrix_;
  DenseMatrix out = factors_.front();
  for (std::size_t i = 1; i < factors_.size(); ++i) out = numkit::kron(out, factors_[i]);
  return out;
}

statesim::Statevector SubsystemObservable::apply_diagonalizer(
    const statesim::Statevector& state) const {
  if (identity_) return state;
  if (matrix_eig_) return statesim::apply_dense(state, matrix_eig_->rotation);
  statesim::Statevector out = state;
  for (std::size_t r = 0; r < factor_eigs_.size(); ++r) {
    out = statesim::apply_local(out, static_cast<int>(r), factor_eigs_[r].rotation);
  }
  return out;
}

double SubsystemObservable::outcome_weight(std::uint64_t bits) const {
  if (identity_) return 1.0;
  if (matrix_eig_) return matrix_eig_->eigenvalues[bits];
  double w = 1.0;
  const int n = qubits_;
  for (int r = 0; r < n; ++r) {
    const std::uint64_t bit = (bits >> (n - 1 - r)) & 1u;
    w *= factor_eigs_[static_cast<std::size_t>(r)].eigenvalues[bit];
  }
  return w;
}

statesim::Statevector SubsystemObservable::apply(const statesim::Statevector& state,
                                                 int first_site) const {
  if (identity_) return state;
  if (matrix_) return statesim::apply_block(state, first_site, *matrix_);
  statesim::Statevector out = state;
  for (std::size_t r = 0; r < factors_.size(); ++r) {
    out = statesim::apply_local(out, first_site + static_cast<int>(r), factors_[r]);
  }
  return out;
}

}  // namespace httn::htncore
