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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "httn/htn_state.hpp"
#include "httn/observable.hpp"
#include "httn/statevector.hpp"

namespace httn::htncore {

/// Exact-mode Monte-Carlo contraction enumerates 4^k Pauli strings; refuse
/// beyond this many subsystems.
inline constexpr int kMaxExactMonteCarloSubsystems = 8;

/// Default cap on the brute-force oracle register (kn qubits).
inline constexpr int kMaxOracleQubits = 20;

/// What a 2x2 contracted matrix represents, which fixes its invariants and
/// which engines accept it.
enum class Role {
  HermitianM,    // <phi^i'|O|phi^i> within one state; Hermitian
  OverlapMA,     // <phi^i'|phi^i> within one state; Hermitian, unit diagonal
  NonHermitianN  // <phi^i'(1)|O|phi^i(2)> across states; no symmetry
};

/// The 2x2 matrix of leaf-level inner products handed to the root
/// contraction. Hermitian roles are validated within 1e-8 at construction.
class ContractedMatrix {
 public:
  ContractedMatrix(std::array<std::array<Complex, 2>, 2> entries, Role role);

  static ContractedMatrix identity(Role role);

  Role role() const { return role_; }
  const Complex& at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  DenseMatrix dense() const;
  bool hermitian(double tol) const;

 private:
  std::array<std::array<Complex, 2>, 2> entries_;
  Role role_;
};

enum class Engine { Spectral, Svd, MonteCarlo };
enum class Mode { Exact, Shots };

/// How shots divide between the real- and imaginary-part circuits of one
/// Hadamard-test estimator. Stratified halves the budget deterministically;
/// Randomized flips a fair coin per shot and doubles the shot value to
/// compensate.
enum class Split { Stratified, Randomized };

struct EstimationConfig {
  Mode mode = Mode::Exact;
  Engine engine = Engine::Svd;
  Split split = Split::Stratified;

  /// Total shot budget in shot mode. Pipelines divide it equally over every
  /// measurement setting they schedule (matrix-construction settings plus
  /// final contractions); a standalone engine or builder call does the same
  /// over its own settings.
  std::uint64_t shots = 10000;
  std::uint64_t seed = 0;

  /// Optional per-setting overrides (0 = derive from `shots`).
  std::uint64_t construction_shots_per_setting = 0;
  std::uint64_t contraction_shots_per_setting = 0;

  EstimationConfig with_engine(Engine e) const {
    EstimationConfig c = *this;
    c.engine = e;
    return c;
  }
};

/// Estimator output. `std_error` pools the standard errors of the real and
/// imaginary parts (zero in exact mode); `shots` counts every consumed draw.
struct ShotEstimate {
  Complex value;
  double std_error = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

/// M_m entries <phi^i'|O_m|phi^i>. IndexedUnitary leaves measure the two
/// diagonal entries directly and the 01 entry with two Hadamard-test
/// settings (the 10 entry is its conjugate); InitStateMapped leaves combine
/// four direct expectations taken on |0>, |1>, |+>, |+y> initial states.
ContractedMatrix build_M(const SubsystemMap& leaf, const SubsystemObservable& obs,
                         const EstimationConfig& cfg);

/// M_Am entries <phi^i'|phi^i>. Diagonals are exactly 1; InitStateMapped
/// leaves return the identity without measurement.
ContractedMatrix build_MA(const SubsystemMap& leaf, const EstimationConfig& cfg);

/// N_m entries <phi^i'(1)|O_m|phi^i(2)> between two states' leaves. All four
/// complex entries are estimated independently (eight Hadamard-test settings
/// in shot mode).
ContractedMatrix build_N(const SubsystemMap& leaf1, const SubsystemMap& leaf2,
                         const SubsystemObservable& obs, const EstimationConfig& cfg);

/// <psi|⊗M_m|psi> for Hermitian contracted matrices: each M_m is
/// eigendecomposed, the rotations are applied to the root state, and
/// measured outcomes are weighted by eigenvalue products.
ShotEstimate contract_hermitian(const DenseMatrix& root,
                                std::span<const ContractedMatrix> mats,
                                const EstimationConfig& cfg);

/// <psi1|⊗N_m|psi2> by singular value decomposition: N_m = B† D' C pushes
/// B into the bra branch and C into the ket branch of a Hadamard test whose
/// outcomes are weighted by rescaled singular values; the product of
/// operator norms multiplies the estimate. A zero N_m short-circuits to an
/// exact 0.
ShotEstimate contract_svd(const DenseMatrix& root1, const DenseMatrix& root2,
                          std::span<const ContractedMatrix> mats,
                          const EstimationConfig& cfg);

/// <psi1|⊗N_m|psi2> by Monte-Carlo Pauli sampling: each N_m is expanded in
/// the Pauli basis, strings are drawn with probability proportional to
/// coefficient magnitudes, and an ancilla-only Hadamard test supplies the
/// sign. Exact mode enumerates all 4^k strings (k capped).
ShotEstimate contract_montecarlo(const DenseMatrix& root1, const DenseMatrix& root2,
                                 std::span<const ContractedMatrix> mats,
                                 const EstimationConfig& cfg);

/// Normalization constant A = sqrt(<psi_HT|psi_HT>), contracted from overlap
/// matrices; exactly 1 when every leaf is InitStateMapped. A non-positive A²
/// estimate raises DegenerateNormalization.
double normalization(const HTNState& state, const EstimationConfig& cfg);

/// <O> = <psi_HT|⊗O_m|psi_HT> / A², the Hermitian-observable pipeline.
/// `obs` must hold one observable per subsystem (empty = all identity).
ShotEstimate expectation(const HTNState& state,
                         std::span<const SubsystemObservable> obs,
                         const EstimationConfig& cfg);

/// T = <psi_HT1|⊗O_m|psi_HT2> / (A1 A2): builds every N_m, contracts with
/// the configured engine, and divides by both normalization constants.
ShotEstimate transition_amplitude(const HTNState& s1, const HTNState& s2,
                                  std::span<const SubsystemObservable> obs,
                                  const EstimationConfig& cfg);

/// Overlap <psi_HT1|psi_HT2> / (A1 A2), the identity-observable special case.
ShotEstimate overlap(const HTNState& s1, const HTNState& s2,
                     const EstimationConfig& cfg);

/// The represented kn-qubit state assembled literally (unnormalized).
/// Verification oracle for every engine; capped at `max_qubits`.
statesim::Statevector oracle_dense(const HTNState& state,
                                   int max_qubits = kMaxOracleQubits);

/// ⊗O_m applied to a kn-qubit register (oracle-side observable action).
statesim::Statevector apply_observables(const statesim::Statevector& state,
                                        std::span<const SubsystemObservable> obs);

}  // namespace httn::htncore
