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

#include "httn/random.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "httn/errors.hpp"

namespace httn::numkit {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw ContractViolation("below(0) is undefined");
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

DenseMatrix haar_random_unitary(int qubits, Rng& rng) {
  if (qubits < 1) throw ContractViolation("haar_random_unitary requires qubits >= 1");
  const std::size_t dim = std::size_t{1} << qubits;
  if (dim > kMaxDim) {
    throw CapacityError("haar_random_unitary dimension exceeds cap");
  }

  using EigenMatrix =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  EigenMatrix g(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(re, im);
    }

  Eigen::HouseholderQR<EigenMatrix> qr(g);
  EigenMatrix q = qr.householderQ();
  // Fix the gauge: multiply column j by phase(R_jj) so the distribution is
  // Haar rather than QR-convention dependent.
  const EigenMatrix& r = qr.matrixQR();
  for (std::size_t j = 0; j < dim; ++j) {
    const Complex d = r(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j));
    const double mag = std::abs(d);
    const Complex phase = mag > 0.0 ? d / mag : Complex(1.0, 0.0);
    q.col(static_cast<Eigen::Index>(j)) *= phase;
  }

  DenseMatrix out(dim);
  for (std::size_t rr = 0; rr < dim; ++rr)
    for (std::size_t cc = 0; cc < dim; ++cc)
      out(rr, cc) = q(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(cc));
  return out;
}

std::vector<Pauli> random_pauli_string(int qubits, Rng& rng) {
  if (qubits < 1) throw ContractViolation("random_pauli_string requires qubits >= 1");
  std::vector<Pauli> labels(static_cast<std::size_t>(qubits));
  for (auto& p : labels) p = static_cast<Pauli>(rng.below(4));
  return labels;
}

}  // namespace httn::numkit
