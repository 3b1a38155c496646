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

#include "httn/statevector.hpp"

#include <cmath>
#include <string>

#include "httn/errors.hpp"

namespace httn::statesim {

namespace {

void check_qubits(int qubits) {
  if (qubits < 0 || qubits > kMaxQubits) {
    throw CapacityError("register of " + std::to_string(qubits) +
                        " qubits exceeds cap " + std::to_string(kMaxQubits));
  }
}

}  // namespace

Statevector::Statevector(int qubits, std::vector<Complex> amps, bool normalized)
    : qubits_(qubits), amps_(std::move(amps)), normalized_(normalized) {
  check_qubits(qubits);
  if (amps_.size() != (std::size_t{1} << qubits)) {
    throw ContractViolation("amplitude count does not match register size");
  }
}

Statevector::Statevector(int qubits, std::vector<Complex> amps)
    : Statevector(qubits, std::move(amps), true) {
  const double n = norm();
  if (std::abs(n - 1.0) > 1e-9) {
    throw ContractViolation("state is not normalized (norm " +
                            std::to_string(n) + ")");
  }
}

Statevector Statevector::unnormalized(int qubits, std::vector<Complex> amps) {
  return Statevector(qubits, std::move(amps), false);
}

Statevector Statevector::zero(int qubits) {
  check_qubits(qubits);
  std::vector<Complex> amps(std::size_t{1} << qubits);
  amps[0] = 1.0;
  return Statevector(qubits, std::move(amps), true);
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

Statevector prepare(const DenseMatrix& unitary, int qubits) {
  check_qubits(qubits);
  if (unitary.dim() != (std::size_t{1} << qubits)) {
    throw ContractViolation("unitary dimension does not match register size");
  }
  if (!unitary.is_unitary(1e-9)) {
    throw ContractViolation("prepare requires a unitary operator");
  }
  // U|0...0> is the first column.
  std::vector<Complex> amps(unitary.dim());
  for (std::size_t r = 0; r < unitary.dim(); ++r) amps[r] = unitary(r, 0);
  return Statevector(qubits, std::move(amps));
}

Statevector apply_block(const Statevector& state, int first_site,
                        const DenseMatrix& op) {
  const int q = state.qubits();
  int g = 0;
  while ((std::size_t{1} << g) < op.dim()) ++g;
  if (op.dim() != (std::size_t{1} << g)) {
    throw ContractViolation("operator dimension is not a power of two");
  }
  if (first_site < 0 || first_site + g > q) {
    throw ContractViolation("operator block out of register range");
  }

  // Site 0 is the most significant bit: the block occupies bits
  // [q - first_site - g, q - first_site).
  const int low = q - first_site - g;
  const std::size_t block = std::size_t{1} << g;
  const std::size_t stride = std::size_t{1} << low;
  const std::size_t outer = (std::size_t{1} << q) / (block * stride);

  std::vector<Complex> out(state.size());
  std::vector<Complex> in_block(block), out_block(block);
  for (std::size_t hi = 0; hi < outer; ++hi) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const std::size_t base = hi * block * stride + lo;
      for (std::size_t i = 0; i < block; ++i)
        in_block[i] = state.amp(base + i * stride);
      for (std::size_t r = 0; r < block; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < block; ++c) acc += op(r, c) * in_block[c];
        out_block[r] = acc;
      }
      for (std::size_t i = 0; i < block; ++i)
        out[base + i * stride] = out_block[i];
    }
  }

  // A unitary op preserves normalization; anything else is flagged.
  const bool keeps_norm = state.normalized() && op.is_unitary(1e-9);
  if (keeps_norm) {
    return Statevector(q, std::move(out));
  }
  return Statevector::unnormalized(q, std::move(out));
}

Statevector apply_local(const Statevector& state, int site, const DenseMatrix& gate) {
  if (gate.dim() != 2) throw ContractViolation("apply_local requires a 2x2 gate");
  if (site < 0 || site >= state.qubits()) {
    throw ContractViolation("apply_local site out of range");
  }
  return apply_block(state, site, gate);
}

Statevector apply_dense(const Statevector& state, const DenseMatrix& op) {
  return apply_block(state, 0, op);
}

Complex inner(const Statevector& a, const Statevector& b) {
  if (a.qubits() != b.qubits()) {
    throw ContractViolation("inner product register mismatch");
  }
  return numkit::inner_product(a.amps(), b.amps());
}

double expectation_observable(const Statevector& state, const DenseMatrix& obs) {
  if (obs.dim() != state.size()) {
    throw ContractViolation("observable dimension does not match register");
  }
  if (!obs.is_hermitian(1e-9)) {
    throw ContractViolation("expectation_observable requires a Hermitian operator");
  }
  const auto applied = obs.apply(state.amps());
  const Complex v = numkit::inner_product(state.amps(), applied);
  return v.real();
}

double expectation_observable(const Statevector& state,
                              std::span<const numkit::Pauli> paulis) {
  if (paulis.size() != static_cast<std::size_t>(state.qubits())) {
    throw ContractViolation("Pauli string length does not match register");
  }
  Statevector applied = state;
  for (std::size_t site = 0; site < paulis.size(); ++site) {
    if (paulis[site] == numkit::Pauli::I) continue;
    applied = apply_local(applied, static_cast<int>(site),
                          numkit::pauli_matrix(paulis[site]));
  }
  return inner(state, applied).real();
}

}  // namespace httn::statesim
