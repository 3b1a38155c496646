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

#include "httn/htn_state.hpp"

#include <cmath>
#include <string>

#include "httn/errors.hpp"

namespace httn::htncore {

namespace {

int qubits_for_dim(std::size_t dim, const char* what) {
  int q = 0;
  while ((std::size_t{1} << q) < dim) ++q;
  if ((std::size_t{1} << q) != dim || dim < 2) {
    throw ContractViolation(std::string(what) + ": dimension is not a power of two");
  }
  return q;
}

void check_unitary(const DenseMatrix& u, const char* what) {
  if (!u.is_unitary(1e-9)) {
    throw ContractViolation(std::string(what) + ": matrix is not unitary");
  }
}

}  // namespace

SubsystemMap::SubsystemMap(bool init_mapped, int qubits,
                           std::vector<DenseMatrix> unitaries)
    : init_state_mapped_(init_mapped), qubits_(qubits),
      unitaries_(std::move(unitaries)) {}

SubsystemMap SubsystemMap::indexed(DenseMatrix u0, DenseMatrix u1) {
  const int q = qubits_for_dim(u0.dim(), "subsystem map");
  if (u1.dim() != u0.dim()) {
    throw ContractViolation("subsystem map: U0 and U1 dimensions differ");
  }
  check_unitary(u0, "subsystem map U0");
  check_unitary(u1, "subsystem map U1");
  return SubsystemMap(false, q, {std::move(u0), std::move(u1)});
}

SubsystemMap SubsystemMap::init_state(DenseMatrix u) {
  const int q = qubits_for_dim(u.dim(), "subsystem map");
  check_unitary(u, "subsystem map U");
  return SubsystemMap(true, q, {std::move(u)});
}

statesim::Statevector SubsystemMap::leaf_state(int index) const {
  if (index != 0 && index != 1) {
    throw ContractViolation("leaf index must be 0 or 1");
  }
  if (!init_state_mapped_) {
    return statesim::prepare(unitaries_[static_cast<std::size_t>(index)], qubits_);
  }
  // U |index>|0...0>: the basis index puts the leaf bit on the leftmost qubit.
  const std::size_t dim = std::size_t{1} << qubits_;
  const std::size_t basis = index == 0 ? 0 : dim >> 1;
  const DenseMatrix& u = unitaries_[0];
  std::vector<Complex> amps(dim);
  for (std::size_t r = 0; r < dim; ++r) amps[r] = u(r, basis);
  return statesim::Statevector(qubits_, std::move(amps));
}

const DenseMatrix& SubsystemMap::unitary(int index) const {
  if (init_state_mapped_) return unitaries_[0];
  if (index != 0 && index != 1) {
    throw ContractViolation("leaf index must be 0 or 1");
  }
  return unitaries_[static_cast<std::size_t>(index)];
}

HTNState::HTNState(DenseMatrix root, std::vector<SubsystemMap> leaves)
    : root_(std::move(root)), leaves_(std::move(leaves)) {
  if (leaves_.empty()) throw ContractViolation("tree state needs at least one subsystem");
  const int k = static_cast<int>(leaves_.size());
  const int root_qubits = qubits_for_dim(root_.dim(), "root tensor");
  if (root_qubits != k) {
    throw ContractViolation("root tensor dimension does not match subsystem count");
  }
  check_unitary(root_, "root tensor");
  n_ = leaves_.front().qubits();
  for (const auto& leaf : leaves_) {
    if (leaf.qubits() != n_) {
      throw ContractViolation("all subsystems must share the same qubit count");
    }
  }
}

bool HTNState::all_init_state_mapped() const {
  for (const auto& leaf : leaves_)
    if (!leaf.init_state_mapped()) return false;
  return true;
}

statesim::Statevector HTNState::root_state() const {
  return statesim::prepare(root_, subsystem_count());
}

}  // namespace httn::htncore
