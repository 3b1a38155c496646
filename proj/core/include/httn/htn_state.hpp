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

#include <vector>

#include "httn/dense_matrix.hpp"
#include "httn/statevector.hpp"

namespace httn::htncore {

using numkit::Complex;
using numkit::DenseMatrix;

/// How the classical leaf index enters an n-qubit subsystem state.
///
/// IndexedUnitary: |phi^i> = U_i |0...0>, one unitary per index value. The
/// two states are generally non-orthogonal, so overlap matrices and a
/// normalization constant are required.
///
/// InitStateMapped: |phi^i> = U |i>|0...0>, a single unitary applied to an
/// indexed basis state. The two states are orthogonal by construction and
/// the network normalization is exactly 1.
class SubsystemMap {
 public:
  static SubsystemMap indexed(DenseMatrix u0, DenseMatrix u1);
  static SubsystemMap init_state(DenseMatrix u);

  bool init_state_mapped() const { return init_state_mapped_; }
  int qubits() const { return qubits_; }

  /// |phi^index> for index in {0, 1}.
  statesim::Statevector leaf_state(int index) const;

  /// The defining unitary: U_index for IndexedUnitary (index 0 or 1), the
  /// single U for InitStateMapped (index ignored).
  const DenseMatrix& unitary(int index = 0) const;

 private:
  SubsystemMap(bool init_mapped, int qubits, std::vector<DenseMatrix> unitaries);

  bool init_state_mapped_ = false;
  int qubits_ = 0;
  std::vector<DenseMatrix> unitaries_;  // {U0, U1} or {U}
};

/// Two-layer tree state: a k-qubit root preparation whose amplitudes weight
/// products of k indexed n-qubit subsystem states. The represented kn-qubit
/// state is generally unnormalized; see `normalization`.
class HTNState {
 public:
  HTNState(DenseMatrix root, std::vector<SubsystemMap> leaves);

  int subsystem_count() const { return static_cast<int>(leaves_.size()); }
  int subsystem_qubits() const { return n_; }
  int total_qubits() const { return subsystem_count() * n_; }

  const DenseMatrix& root() const { return root_; }
  const SubsystemMap& leaf(int m) const { return leaves_[static_cast<std::size_t>(m)]; }
  const std::vector<SubsystemMap>& leaves() const { return leaves_; }

  /// True when every leaf uses the initial-state mapping (normalization 1).
  bool all_init_state_mapped() const;

  /// U_root |0...0> on the k-qubit root register.
  statesim::Statevector root_state() const;

 private:
  DenseMatrix root_;
  std::vector<SubsystemMap> leaves_;
  int n_ = 0;
};

}  // namespace httn::htncore
