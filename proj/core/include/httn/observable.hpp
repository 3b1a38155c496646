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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "httn/decompositions.hpp"
#include "httn/dense_matrix.hpp"
#include "httn/pauli.hpp"
#include "httn/statevector.hpp"

namespace httn::htncore {

/// Hermitian observable on one n-qubit subsystem, either a tensor product of
/// per-qubit 2x2 factors or a general 2^n x 2^n matrix. Spectral
/// decompositions are cached at construction so measurement circuits can
/// rotate into the eigenbasis and weight outcomes by eigenvalue products.
class SubsystemObservable {
 public:
  /// Identity observable (overlaps); diagonalizer and weights are trivial.
  static SubsystemObservable identity(int qubits);

  /// Tensor product of per-qubit Hermitian 2x2 factors, leftmost first.
  static SubsystemObservable from_factors(std::vector<numkit::DenseMatrix> factors,
                                          double tol = 1e-9);

  /// Product of single-qubit Paulis.
  static SubsystemObservable from_pauli_string(std::span<const numkit::Pauli> labels);

  /// General Hermitian matrix on the full subsystem.
  static SubsystemObservable from_matrix(numkit::DenseMatrix matrix, double tol = 1e-9);

  int qubits() const { return qubits_; }
  bool is_identity() const { return identity_; }
  bool factored() const { return !factors_.empty() || identity_; }

  /// Largest singular value; a product of Paulis has operator norm 1.
  double op_norm() const { return op_norm_; }

  /// The full 2^n x 2^n matrix (built on demand for factored forms).
  numkit::DenseMatrix dense() const;

  /// Rotate a state into the observable eigenbasis (per-qubit rotations for
  /// factored observables, one full rotation otherwise).
  statesim::Statevector apply_diagonalizer(const statesim::Statevector& state) const;

  /// Eigenvalue attached to a measured outcome of the rotated state: the
  /// product of per-qubit eigenvalues, or the eigenvalue of the outcome
  /// index for general matrices. Bits pack qubit 0 leftmost.
  double outcome_weight(std::uint64_t bits) const;

  /// O|v> on a register where this subsystem starts at `first_site`
  /// (identity on all other qubits).
  statesim::Statevector apply(const statesim::Statevector& state, int first_site) const;

 private:
  SubsystemObservable() = default;

  int qubits_ = 0;
  bool identity_ = false;
  double op_norm_ = 1.0;
  std::vector<numkit::DenseMatrix> factors_;                 // factored form
  std::vector<numkit::SpectralDecomposition> factor_eigs_;   // cached per factor
  std::optional<numkit::DenseMatrix> matrix_;                // general form
  std::optional<numkit::SpectralDecomposition> matrix_eig_;  // cached
};

}  // namespace httn::htncore
