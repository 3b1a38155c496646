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

#include "httn/decompositions.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "httn/errors.hpp"
#include "httn/pauli.hpp"

namespace httn::numkit {

namespace {

using EigenMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMatrix to_eigen(const DenseMatrix& m) {
  return Eigen::Map<const EigenMatrix>(m.data(), m.dim(), m.dim());
}

DenseMatrix from_eigen(const EigenMatrix& e) {
  DenseMatrix out(static_cast<std::size_t>(e.rows()));
  Eigen::Map<EigenMatrix>(out.data(), e.rows(), e.cols()) = e;
  return out;
}

}  // namespace

DenseMatrix SpectralDecomposition::reconstruct() const {
  DenseMatrix d(rotation.dim());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) d(i, i) = eigenvalues[i];
  return rotation.adjoint() * d * rotation;
}

DenseMatrix SVDFactors::reconstruct() const {
  DenseMatrix d(left.dim());
  for (std::size_t i = 0; i < singulars.size(); ++i) d(i, i) = singulars[i];
  return left.adjoint() * d * right;
}

DenseMatrix PauliDecomposition::reconstruct() const {
  DenseMatrix out(2);
  for (int k = 0; k < 4; ++k)
    out = out + pauli_matrix(static_cast<Pauli>(k)) * coeffs[k];
  return out;
}

SpectralDecomposition eig_hermitian(const DenseMatrix& m, double tol) {
  if (!m.all_finite()) throw ContractViolation("eig_hermitian requires finite input");
  if (!m.is_hermitian(tol)) {
    throw ContractViolation("eig_hermitian requires a Hermitian matrix");
  }
  const std::size_t dim = m.dim();
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(to_eigen(m));
  if (solver.info() != Eigen::Success) {
    throw ContractViolation("Hermitian eigendecomposition failed to converge");
  }

  // Solver output is ascending; reorder to descending, stable on ties.
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return solver.eigenvalues()(static_cast<Eigen::Index>(a)) >
           solver.eigenvalues()(static_cast<Eigen::Index>(b));
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(dim);
  DenseMatrix rotation(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto src = static_cast<Eigen::Index>(order[i]);
    out.eigenvalues[i] = solver.eigenvalues()(src);
    // Row i of U is the conjugated eigenvector, so M = U† D U.
    for (std::size_t c = 0; c < dim; ++c) {
      rotation(i, c) =
          std::conj(solver.eigenvectors()(static_cast<Eigen::Index>(c), src));
    }
  }
  out.rotation = std::move(rotation);
  return out;
}

SVDFactors svd(const DenseMatrix& m) {
  if (!m.all_finite()) throw ContractViolation("svd requires finite input");
  const std::size_t dim = m.dim();

  SVDFactors out;
  if (m.max_abs() == 0.0) {
    out.left = DenseMatrix::identity(dim);
    out.right = DenseMatrix::identity(dim);
    out.singulars.assign(dim, 0.0);
    out.opnorm = 0.0;
    return out;
  }

  Eigen::JacobiSVD<EigenMatrix> solver(
      to_eigen(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
  // m = U S V†; store B = U†, C = V† so that m = B† S C.
  out.left = from_eigen(solver.matrixU().adjoint());
  out.right = from_eigen(solver.matrixV().adjoint());
  out.singulars.resize(dim);
  for (std::size_t i = 0; i < dim; ++i)
    out.singulars[i] = solver.singularValues()(static_cast<Eigen::Index>(i));
  out.opnorm = out.singulars.empty() ? 0.0 : out.singulars.front();
  return out;
}

PauliDecomposition pauli_decompose(const DenseMatrix& n) {
  if (n.dim() != 2) throw ContractViolation("pauli_decompose requires a 2x2 matrix");
  if (!n.all_finite()) throw ContractViolation("pauli_decompose requires finite input");

  PauliDecomposition out;
  for (int k = 0; k < 4; ++k) {
    const DenseMatrix& sigma = pauli_matrix(static_cast<Pauli>(k));
    // h_k = tr(sigma_k n) / 2; sigma is Hermitian so no conjugation needed.
    Complex tr = 0.0;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) tr += sigma(r, c) * n(c, r);
    out.coeffs[k] = tr / 2.0;
  }

  out.gamma = 0.0;
  for (int k = 0; k < 4; ++k) out.gamma += std::abs(out.coeffs[k]);
  for (int k = 0; k < 4; ++k) {
    const double mag = std::abs(out.coeffs[k]);
    out.probs[k] = (out.gamma > 0.0 && mag > 0.0) ? mag / out.gamma : 0.0;
    out.phases[k] = mag > 0.0 ? std::arg(out.coeffs[k]) : 0.0;
  }
  return out;
}

}  // namespace httn::numkit
