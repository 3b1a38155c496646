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
#include <vector>

#include "httn/contraction.hpp"
#include "httn/errors.hpp"
#include "httn/htn_state.hpp"
#include "httn/observable.hpp"
#include "httn/random.hpp"
#include "support/test_util.hpp"

using namespace httn;
using htncore::ContractedMatrix;
using htncore::EstimationConfig;
using htncore::Role;
using htncore::SubsystemMap;
using htncore::SubsystemObservable;
using numkit::Complex;
using numkit::DenseMatrix;
using numkit::Pauli;

namespace {

const EstimationConfig kExact{};

// Dense reference <phi^row | O | phi^col> straight from the leaf states.
Complex dense_entry(const SubsystemMap& bra_leaf, const SubsystemMap& ket_leaf,
                    const SubsystemObservable& obs, int row, int col) {
  const auto bra = bra_leaf.leaf_state(row);
  auto ket = ket_leaf.leaf_state(col);
  ket = obs.apply(ket, 0);
  return numkit::inner_product(bra.amps(), ket.amps());
}

}  // namespace

TEST_CASE("SubsystemMap: validation and leaf states") {
  numkit::Rng rng(33);
  DenseMatrix skewed(2);
  skewed(0, 0) = 2.0;
  CHECK_THROWS_AS(SubsystemMap::init_state(skewed), ContractViolation);

  const auto u = numkit::haar_random_unitary(2, rng);
  const auto leaf = SubsystemMap::init_state(u);
  CHECK(leaf.qubits() == 2);
  // |phi^1> = U|10> is the third column.
  const auto phi1 = leaf.leaf_state(1);
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(std::abs(phi1.amp(r) - u(r, 2)) < 1e-12);
  }
  CHECK_THROWS_AS(leaf.leaf_state(2), ContractViolation);
}

TEST_CASE("SubsystemMap: initial-state mapping gives orthogonal leaves") {
  numkit::Rng rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(trial % 3);
    const auto leaf = testutil::random_leaf(n, rng, true);
    const auto overlap =
        statesim::inner(leaf.leaf_state(0), leaf.leaf_state(1));
    CHECK(std::abs(overlap) < 1e-12);
  }
}

TEST_CASE("build_M: identity observable reproduces the overlap matrix") {
  numkit::Rng rng(35);
  const auto leaf = testutil::random_leaf(2, rng, false);
  const auto m = htncore::build_M(leaf, SubsystemObservable::identity(2), kExact);
  const auto ma = htncore::build_MA(leaf, kExact);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(m.at(r, c) - ma.at(r, c)) < 1e-12);
}

TEST_CASE("build_M: computational-basis eigenstates under Z") {
  const int n = 3;
  const auto leaf = SubsystemMap::init_state(DenseMatrix::identity(8));
  std::vector<DenseMatrix> factors{numkit::pauli_matrix(Pauli::Z),
                                   DenseMatrix::identity(2),
                                   DenseMatrix::identity(2)};
  const auto obs = SubsystemObservable::from_factors(factors);
  const auto m = htncore::build_M(leaf, obs, kExact);
  CHECK(std::abs(m.at(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(m.at(1, 1) + 1.0) < 1e-12);
  CHECK(std::abs(m.at(0, 1)) < 1e-12);
  CHECK(std::abs(m.at(1, 0)) < 1e-12);
  (void)n;
}

TEST_CASE("build_M: exact mode matches the dense oracle (both mappings)") {
  numkit::Rng rng(31);
  for (int trial = 0; trial < 24; ++trial) {
    const int n = 1 + static_cast<int>(trial % 3);
    const bool init_mapped = trial % 2 == 1;
    const auto leaf = testutil::random_leaf(n, rng, init_mapped);
    const auto labels = numkit::random_pauli_string(n, rng);
    const auto obs = SubsystemObservable::from_pauli_string(labels);
    const auto m = htncore::build_M(leaf, obs, kExact);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        CHECK(std::abs(m.at(r, c) - dense_entry(leaf, leaf, obs, r, c)) < 1e-9);
      }
    }
    CHECK(m.hermitian(1e-9));
  }
}

TEST_CASE("build_M: general-matrix observable matches the dense oracle") {
  numkit::Rng rng(36);
  const int n = 2;
  const auto leaf = testutil::random_leaf(n, rng, false);
  const auto obs =
      SubsystemObservable::from_matrix(testutil::random_hermitian(4, rng));
  const auto m = htncore::build_M(leaf, obs, kExact);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(m.at(r, c) - dense_entry(leaf, leaf, obs, r, c)) < 1e-9);
}

TEST_CASE("build_MA: fixed points and the dense oracle") {
  numkit::Rng rng(37);
  const auto init_leaf = testutil::random_leaf(2, rng, true);
  const auto id = htncore::build_MA(init_leaf, kExact);
  CHECK(std::abs(id.at(0, 0) - 1.0) == 0.0);
  CHECK(std::abs(id.at(0, 1)) == 0.0);
  CHECK(std::abs(id.at(1, 0)) == 0.0);
  CHECK(std::abs(id.at(1, 1) - 1.0) == 0.0);

  const auto u = numkit::haar_random_unitary(2, rng);
  const auto same = SubsystemMap::indexed(u, u);
  const auto ones = htncore::build_MA(same, kExact);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(ones.at(r, c) - 1.0) < 1e-10);

  const auto leaf = testutil::random_leaf(3, rng, false);
  const auto ma = htncore::build_MA(leaf, kExact);
  const auto obs_id = SubsystemObservable::identity(3);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(ma.at(r, c) - dense_entry(leaf, leaf, obs_id, r, c)) < 1e-9);
}

TEST_CASE("build_N: Hermitian special case equals the overlap matrix") {
  numkit::Rng rng(38);
  const auto leaf = testutil::random_leaf(2, rng, false);
  const auto n_mat = htncore::build_N(leaf, leaf, SubsystemObservable::identity(2), kExact);
  const auto ma = htncore::build_MA(leaf, kExact);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(n_mat.at(r, c) - ma.at(r, c)) < 1e-10);

  const auto init_leaf = testutil::random_leaf(2, rng, true);
  const auto n_id = htncore::build_N(init_leaf, init_leaf,
                                     SubsystemObservable::identity(2), kExact);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(n_id.at(r, c) - (r == c ? 1.0 : 0.0)) < 1e-10);
}

TEST_CASE("build_N: exact mode matches the dense oracle, generically non-Hermitian") {
  numkit::Rng rng(41);
  int non_hermitian_seen = 0;
  for (int trial = 0; trial < 16; ++trial) {
    const int n = 1 + static_cast<int>(trial % 3);
    const auto leaf1 = testutil::random_leaf(n, rng, trial % 4 == 0);
    const auto leaf2 = testutil::random_leaf(n, rng, trial % 4 == 1);
    const auto obs = SubsystemObservable::from_pauli_string(
        numkit::random_pauli_string(n, rng));
    const auto nm = htncore::build_N(leaf1, leaf2, obs, kExact);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        CHECK(std::abs(nm.at(r, c) - dense_entry(leaf1, leaf2, obs, r, c)) < 1e-9);
      }
    }
    if (std::abs(std::conj(nm.at(0, 1)) - nm.at(1, 0)) > 1e-6) {
      ++non_hermitian_seen;
    }
  }
  CHECK(non_hermitian_seen > 8);  // (N^01)* != N^10 generically

  const auto l2 = testutil::random_leaf(2, rng, false);
  const auto l3 = testutil::random_leaf(3, rng, false);
  CHECK_THROWS_AS(
      htncore::build_N(l2, l3, SubsystemObservable::identity(2), kExact),
      ContractViolation);
}

TEST_CASE("build matrices in shot mode: invariants hold, estimates converge") {
  numkit::Rng rng(43);
  const auto leaf = testutil::random_leaf(2, rng, false);
  const auto obs = SubsystemObservable::from_pauli_string(
      std::vector<Pauli>{Pauli::X, Pauli::Z});

  EstimationConfig cfg;
  cfg.mode = htncore::Mode::Shots;
  cfg.shots = 400000;  // 100k per setting
  cfg.seed = 99;
  const auto noisy = htncore::build_M(leaf, obs, cfg);
  const auto exact = htncore::build_M(leaf, obs, kExact);
  CHECK(noisy.hermitian(1e-12));  // Hermitian by construction, not estimation
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(std::abs(noisy.at(r, c) - exact.at(r, c)) < 0.02);

  // Same seed, same matrix; different seed, different noise.
  const auto repeat = htncore::build_M(leaf, obs, cfg);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(noisy.at(r, c) == repeat.at(r, c));
}

TEST_CASE("ContractedMatrix: role invariants are enforced") {
  CHECK_THROWS_AS(ContractedMatrix({{{Complex(0.0), Complex(1.0)},
                                     {Complex(0.0), Complex(0.0)}}},
                                   Role::HermitianM),
                  ContractViolation);
  CHECK_THROWS_AS(ContractedMatrix({{{Complex(0.5), Complex(0.0)},
                                     {Complex(0.0), Complex(1.0)}}},
                                   Role::OverlapMA),
                  ContractViolation);
  const auto ok = ContractedMatrix::identity(Role::OverlapMA);
  CHECK(ok.hermitian(0.0));
}

TEST_CASE("SubsystemObservable: diagonalizer and weights reproduce expectations") {
  numkit::Rng rng(44);
  SUBCASE("factored") {
    const auto labels = numkit::random_pauli_string(3, rng);
    const auto obs = SubsystemObservable::from_pauli_string(labels);
    const auto state = testutil::random_state(3, rng);
    const auto rotated = obs.apply_diagonalizer(state);
    double acc = 0.0;
    for (std::size_t j = 0; j < rotated.size(); ++j) {
      acc += std::norm(rotated.amp(j)) * obs.outcome_weight(j);
    }
    const double direct = statesim::expectation_observable(state, obs.dense());
    CHECK(std::abs(acc - direct) < 1e-10);
    CHECK(obs.op_norm() == doctest::Approx(1.0));
  }
  SUBCASE("general matrix") {
    const auto obs =
        SubsystemObservable::from_matrix(testutil::random_hermitian(8, rng));
    const auto state = testutil::random_state(3, rng);
    const auto rotated = obs.apply_diagonalizer(state);
    double acc = 0.0;
    for (std::size_t j = 0; j < rotated.size(); ++j) {
      acc += std::norm(rotated.amp(j)) * obs.outcome_weight(j);
    }
    const double direct = statesim::expectation_observable(state, obs.dense());
    CHECK(std::abs(acc - direct) < 1e-10);
  }
  SUBCASE("non-Hermitian factor is rejected") {
    std::vector<DenseMatrix> bad{testutil::random_complex_matrix(2, rng)};
    CHECK_THROWS_AS(SubsystemObservable::from_factors(bad), ContractViolation);
  }
}
