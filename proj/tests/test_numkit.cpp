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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "httn/decompositions.hpp"
#include "httn/dense_matrix.hpp"
#include "httn/errors.hpp"
#include "httn/pauli.hpp"
#include "httn/random.hpp"
#include "support/test_util.hpp"

using namespace httn;
using numkit::Complex;
using numkit::DenseMatrix;
using numkit::Pauli;
using testutil::random_complex_matrix;
using testutil::random_hermitian;

namespace {
const Complex kI(0.0, 1.0);
}

TEST_CASE("kron: identity and Pauli cases") {
  const auto i2 = DenseMatrix::identity(2);
  CHECK(numkit::kron(i2, i2).max_abs_diff(DenseMatrix::identity(4)) == 0.0);

  const auto xz = numkit::kron(numkit::pauli_matrix(Pauli::X),
                               numkit::pauli_matrix(Pauli::Z));
  DenseMatrix expected(4);
  expected(0, 2) = 1.0;
  expected(1, 3) = -1.0;
  expected(2, 0) = 1.0;
  expected(3, 1) = -1.0;
  CHECK(xz.max_abs_diff(expected) == 0.0);
}

TEST_CASE("kron: (A⊗B)(v⊗w) = Av ⊗ Bw") {
  numkit::Rng rng(7);
  const auto a = random_complex_matrix(2, rng);
  const auto b = random_complex_matrix(2, rng);
  const auto v = testutil::random_unit_vector(2, rng);
  const auto w = testutil::random_unit_vector(2, rng);

  std::vector<Complex> vw(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      vw[static_cast<std::size_t>(2 * i + j)] =
          v[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];

  const auto lhs = numkit::kron(a, b).apply(vw);
  const auto av = a.apply(v);
  const auto bw = b.apply(w);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto rhs =
          av[static_cast<std::size_t>(i)] * bw[static_cast<std::size_t>(j)];
      CHECK(std::abs(lhs[static_cast<std::size_t>(2 * i + j)] - rhs) < 1e-12);
    }
}

TEST_CASE("kron: capacity error beyond the dimension cap") {
  numkit::Rng rng(3);
  const auto big = numkit::haar_random_unitary(7, rng);   // 128
  const auto mid = numkit::haar_random_unitary(6, rng);   // 64
  CHECK_THROWS_AS(numkit::kron(big, mid), CapacityError); // 8192 > 4096
}

TEST_CASE("eig_hermitian: Z and X") {
  const auto z = numkit::eig_hermitian(numkit::pauli_matrix(Pauli::Z));
  CHECK(z.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(z.eigenvalues[1] == doctest::Approx(-1.0));
  // Rotation is the identity up to phases.
  CHECK(std::abs(z.rotation(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(z.rotation(1, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(z.rotation(0, 1)) == doctest::Approx(0.0));

  const auto x = numkit::eig_hermitian(numkit::pauli_matrix(Pauli::X));
  CHECK(x.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(x.eigenvalues[1] == doctest::Approx(-1.0));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      CHECK(std::abs(x.rotation(r, c)) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("eig_hermitian: reconstruction and ordering on random input") {
  numkit::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = trial % 2 == 0 ? 2 : 4;
    const auto m = random_hermitian(dim, rng);
    const auto eig = numkit::eig_hermitian(m);
    CHECK(eig.reconstruct().max_abs_diff(m) < 1e-10);
    for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i) {
      CHECK(eig.eigenvalues[i - 1] >= eig.eigenvalues[i]);
    }
    CHECK(eig.rotation.is_unitary(1e-10));
  }
}

TEST_CASE("eig_hermitian: idempotent under reconstruction") {
  numkit::Rng rng(12);
  const auto m = random_hermitian(2, rng);
  const auto once = numkit::eig_hermitian(m);
  const auto twice = numkit::eig_hermitian(once.reconstruct());
  CHECK(once.reconstruct().max_abs_diff(twice.reconstruct()) < 1e-10);
  for (std::size_t i = 0; i < once.eigenvalues.size(); ++i) {
    CHECK(once.eigenvalues[i] == doctest::Approx(twice.eigenvalues[i]).epsilon(1e-10));
  }
}

TEST_CASE("eig_hermitian: rejects non-Hermitian input") {
  DenseMatrix m = DenseMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  CHECK_THROWS_AS(numkit::eig_hermitian(m), ContractViolation);
}

TEST_CASE("svd: diagonal and zero matrices") {
  const auto d = numkit::svd(DenseMatrix::from_rows({{1.0, 0.0}, {0.0, 0.5}}));
  CHECK(d.singulars[0] == doctest::Approx(1.0));
  CHECK(d.singulars[1] == doctest::Approx(0.5));
  CHECK(d.opnorm == doctest::Approx(1.0));
  CHECK(d.left.max_abs_diff(DenseMatrix::identity(2)) < 1e-12);
  CHECK(d.right.max_abs_diff(DenseMatrix::identity(2)) < 1e-12);

  const auto z = numkit::svd(DenseMatrix(2));
  CHECK(z.opnorm == 0.0);
  CHECK(z.singulars[0] == 0.0);
  CHECK(z.singulars[1] == 0.0);
  CHECK(z.left.max_abs_diff(DenseMatrix::identity(2)) == 0.0);
  CHECK(z.right.max_abs_diff(DenseMatrix::identity(2)) == 0.0);
}

TEST_CASE("svd: reconstruction and norm oracle on random input") {
  numkit::Rng rng(13);
  const auto m = random_complex_matrix(2, rng);
  const auto f = numkit::svd(m);
  CHECK(f.reconstruct().max_abs_diff(m) < 1e-10);
  CHECK(f.left.is_unitary(1e-10));
  CHECK(f.right.is_unitary(1e-10));
  CHECK(f.singulars[0] >= f.singulars[1]);
  CHECK(f.singulars[1] >= 0.0);
  CHECK(f.opnorm == doctest::Approx(f.singulars[0]));

  numkit::Rng oracle_rng(14);
  const double oracle = testutil::opnorm_oracle(m, oracle_rng);
  CHECK(std::abs(f.opnorm - oracle) < 1e-8);
}

TEST_CASE("svd: factor invariants hold over many random matrices") {
  numkit::Rng rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_complex_matrix(2, rng);
    const auto f = numkit::svd(m);
    CHECK(f.reconstruct().max_abs_diff(m) < 1e-10);
    CHECK(f.singulars[0] >= f.singulars[1]);
    CHECK(f.singulars[1] >= -0.0);
    CHECK(f.opnorm == f.singulars[0]);
  }
  // Cross-oracle on a few of them with the sampled-vector + power oracle.
  for (int trial = 0; trial < 5; ++trial) {
    const auto m = random_complex_matrix(2, rng);
    numkit::Rng oracle_rng(100 + static_cast<std::uint64_t>(trial));
    CHECK(std::abs(numkit::svd(m).opnorm -
                   testutil::opnorm_oracle(m, oracle_rng, 2000, 100)) < 1e-8);
  }
}

TEST_CASE("pauli_decompose: identity and ladder operator") {
  const auto id = numkit::pauli_decompose(DenseMatrix::identity(2));
  CHECK(std::abs(id.coeffs[0] - 1.0) < 1e-15);
  CHECK(std::abs(id.coeffs[1]) < 1e-15);
  CHECK(std::abs(id.coeffs[2]) < 1e-15);
  CHECK(std::abs(id.coeffs[3]) < 1e-15);
  CHECK(id.gamma == doctest::Approx(1.0));

  // (X + iY)/2 = |0><1|.
  DenseMatrix ladder(2);
  ladder(0, 1) = 1.0;
  const auto l = numkit::pauli_decompose(ladder);
  CHECK(std::abs(l.coeffs[0]) < 1e-15);
  CHECK(std::abs(l.coeffs[1] - 0.5) < 1e-15);
  CHECK(std::abs(l.coeffs[2] - kI * 0.5) < 1e-15);
  CHECK(std::abs(l.coeffs[3]) < 1e-15);
  CHECK(l.gamma == doctest::Approx(1.0));
}

TEST_CASE("pauli_decompose: reconstruction, probabilities, phases") {
  numkit::Rng rng(17);
  const auto m = random_complex_matrix(2, rng);
  const auto d = numkit::pauli_decompose(m);
  CHECK(d.reconstruct().max_abs_diff(m) < 1e-12);

  double prob_sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    prob_sum += d.probs[static_cast<std::size_t>(k)];
    const double mag = std::abs(d.coeffs[static_cast<std::size_t>(k)]);
    if (mag > 0.0) {
      const Complex expected =
          mag * std::polar(1.0, d.phases[static_cast<std::size_t>(k)]);
      CHECK(std::abs(expected - d.coeffs[static_cast<std::size_t>(k)]) < 1e-12);
    } else {
      CHECK(d.phases[static_cast<std::size_t>(k)] == 0.0);
      CHECK(d.probs[static_cast<std::size_t>(k)] == 0.0);
    }
  }
  CHECK(prob_sum == doctest::Approx(1.0).epsilon(1e-12));

  const auto zero = numkit::pauli_decompose(DenseMatrix(2));
  CHECK(zero.gamma == 0.0);
  for (int k = 0; k < 4; ++k) {
    CHECK(zero.probs[static_cast<std::size_t>(k)] == 0.0);
    CHECK(zero.phases[static_cast<std::size_t>(k)] == 0.0);
  }
}

TEST_CASE("pauli_decompose: gamma dominates the operator norm") {
  numkit::Rng rng(18);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto m = random_complex_matrix(2, rng);
    CHECK(numkit::svd(m).opnorm <= numkit::pauli_decompose(m).gamma + 1e-10);
  }
}

TEST_CASE("haar_random_unitary: unitarity, determinant, determinism") {
  numkit::Rng rng(19);
  const auto u = numkit::haar_random_unitary(1, rng);
  CHECK(u.is_unitary(1e-10));
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  CHECK(std::abs(std::abs(det) - 1.0) < 1e-10);

  numkit::Rng a(42), b(42);
  const auto ua = numkit::haar_random_unitary(3, a);
  const auto ub = numkit::haar_random_unitary(3, b);
  CHECK(ua.max_abs_diff(ub) == 0.0);

  CHECK_THROWS_AS(numkit::haar_random_unitary(0, rng), ContractViolation);
}

TEST_CASE("haar_random_unitary: rows normalized, first-moment statistics") {
  numkit::Rng rng(20);
  const int samples = 1000;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto u = numkit::haar_random_unitary(3, rng);
    if (s < 20) {
      for (std::size_t r = 0; r < 8; ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < 8; ++c) row += std::norm(u(r, c));
        CHECK(std::abs(row - 1.0) < 1e-10);
      }
    }
    const double v = std::norm(u(0, 0));
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / samples;
  const double var = (sum_sq - samples * mean * mean) / (samples - 1.0);
  const double se = std::sqrt(var / samples);
  // Haar moment E|u_ij|^2 = 1/8 for a 3-qubit unitary.
  CHECK(std::abs(mean - 0.125) < 3.0 * se);
}

TEST_CASE("random_pauli_string: preconditions, determinism, uniformity") {
  numkit::Rng rng(21);
  CHECK_THROWS_AS(numkit::random_pauli_string(0, rng), ContractViolation);

  numkit::Rng a(5), b(5);
  CHECK(numkit::random_pauli_string(6, a) == numkit::random_pauli_string(6, b));

  int counts[4] = {0, 0, 0, 0};
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    counts[static_cast<int>(numkit::random_pauli_string(1, rng)[0])]++;
  }
  double chi_sq = 0.0;
  const double expected = draws / 4.0;
  for (int c : counts) chi_sq += (c - expected) * (c - expected) / expected;
  CHECK(chi_sq < 11.345);  // 1% critical value, 3 degrees of freedom
}
