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

#include <span>
#include <vector>

#include "httn/dense_matrix.hpp"
#include "httn/pauli.hpp"

namespace httn::statesim {

using numkit::Complex;
using numkit::DenseMatrix;

/// Largest register the simulator accepts: 2^20 amplitudes.
inline constexpr int kMaxQubits = 20;

/// Complex amplitude vector over a qubit register. Qubit 0 is the leftmost
/// label of outcome strings, i.e. the most significant bit of the amplitude
/// index. States are normalized unless explicitly constructed otherwise.
class Statevector {
 public:
  Statevector() = default;

  /// Normalized state; throws if the norm deviates from 1 by more than 1e-9.
  Statevector(int qubits, std::vector<Complex> amps);

  /// Explicitly unnormalized state (intermediate results, oracle outputs).
  static Statevector unnormalized(int qubits, std::vector<Complex> amps);

  /// |00...0>.
  static Statevector zero(int qubits);

  int qubits() const { return qubits_; }
  std::size_t size() const { return amps_.size(); }
  bool normalized() const { return normalized_; }

  std::span<const Complex> amps() const { return amps_; }
  const Complex& amp(std::size_t basis) const { return amps_[basis]; }

  double norm() const;

 private:
  Statevector(int qubits, std::vector<Complex> amps, bool normalized);

  int qubits_ = 0;
  std::vector<Complex> amps_;
  bool normalized_ = true;
};

/// U |0...0> for a unitary on the whole register.
Statevector prepare(const DenseMatrix& unitary, int qubits);

/// Apply a 2x2 gate to one qubit (site 0 = leftmost label). The gate may be
/// non-unitary, in which case the result is flagged unnormalized.
Statevector apply_local(const Statevector& state, int site, const DenseMatrix& gate);

/// Apply a 2^g x 2^g operator to the g contiguous qubits starting at
/// `first_site`.
Statevector apply_block(const Statevector& state, int first_site,
                        const DenseMatrix& op);

/// Apply a full-register operator.
Statevector apply_dense(const Statevector& state, const DenseMatrix& op);

/// <a|b>; registers must match.
Complex inner(const Statevector& a, const Statevector& b);

/// <state|O|state> for a Hermitian operator on the full register.
/// The result is real within 1e-9 by construction.
double expectation_observable(const Statevector& state, const DenseMatrix& obs);

/// <state|P|state> for a Pauli string (one label per qubit).
double expectation_observable(const Statevector& state,
                              std::span<const numkit::Pauli> paulis);

}  // namespace httn::statesim
