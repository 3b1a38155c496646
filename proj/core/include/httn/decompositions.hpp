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
#include <vector>

#include "httn/dense_matrix.hpp"

namespace httn::numkit {

/// Eigendecomposition of a Hermitian matrix M = U† D U. `rotation` is U,
/// so applying U to a state and reading the eigenvalue of the measured
/// basis state reproduces <M>. Eigenvalues are sorted descending with a
/// stable tie-break.
struct SpectralDecomposition {
  DenseMatrix rotation;
  std::vector<double> eigenvalues;

  /// U† D U.
  DenseMatrix reconstruct() const;
};

/// Singular value decomposition M = B† D' C with B, C unitary and D'
/// diagonal non-negative descending. `opnorm` equals singulars[0].
struct SVDFactors {
  DenseMatrix left;   // B
  DenseMatrix right;  // C
  std::vector<double> singulars;
  double opnorm = 0.0;

  /// B† D' C.
  DenseMatrix reconstruct() const;
};

/// Pauli-basis expansion of a 2x2 matrix: N = sum_k h_k sigma_k with
/// h_k = tr(sigma_k N) / 2. gamma is the coefficient one-norm sum |h_k|;
/// probs[k] = |h_k| / gamma (all zero when gamma = 0) and phases[k]
/// satisfies h_k = |h_k| e^{i phase_k} with phase 0 for vanishing h_k.
struct PauliDecomposition {
  std::array<Complex, 4> coeffs;
  double gamma = 0.0;
  std::array<double, 4> probs;
  std::array<double, 4> phases;

  DenseMatrix reconstruct() const;
};

/// Spectral decomposition of a Hermitian matrix. `tol` bounds the allowed
/// max-norm deviation of m from m†; larger deviations throw
/// ContractViolation. Reconstruction holds within 10 * tol.
SpectralDecomposition eig_hermitian(const DenseMatrix& m, double tol = 1e-10);

/// SVD of any finite square matrix. A zero matrix yields identity factors
/// by convention.
SVDFactors svd(const DenseMatrix& m);

/// Pauli decomposition of a 2x2 matrix.
PauliDecomposition pauli_decompose(const DenseMatrix& n);

}  // namespace httn::numkit
