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

#include <benchmark/benchmark.h>

#include "httn/contraction.hpp"
#include "httn/experiments.hpp"
#include "httn/hadamard_test.hpp"
#include "httn/random.hpp"

using namespace httn;
using htncore::ContractedMatrix;
using htncore::EstimationConfig;
using htncore::Role;

namespace {

std::vector<ContractedMatrix> sample_mats(int k, int n) {
  std::vector<ContractedMatrix> mats;
  for (int m = 0; m < k; ++m) {
    auto rng = numkit::substream(10, static_cast<std::uint64_t>(m));
    const auto s = experiments::draw_contracted_sample(n, rng);
    mats.push_back(ContractedMatrix(
        {{{s(0, 0), s(0, 1)}, {s(1, 0), s(1, 1)}}}, Role::NonHermitianN));
  }
  return mats;
}

}  // namespace

static void BM_HadamardTestDistribution(benchmark::State& state) {
  numkit::Rng rng(20);
  const int q = static_cast<int>(state.range(0));
  const auto u0 = numkit::haar_random_unitary(q, rng);
  const auto u1 = numkit::haar_random_unitary(q, rng);
  const auto phi0 = statesim::prepare(u0, q);
  const auto phi1 = statesim::prepare(u1, q);
  std::vector<int> sites(static_cast<std::size_t>(q));
  for (int s = 0; s < q; ++s) sites[static_cast<std::size_t>(s)] = s;
  for (auto _ : state) {
    auto d = statesim::hadamard_test_distribution({phi0, phi1, 0.0, sites});
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_HadamardTestDistribution)->DenseRange(2, 10, 2);

static void BM_ContractSvdExact(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto mats = sample_mats(k, 2);
  numkit::Rng rng(21);
  const auto root1 = numkit::haar_random_unitary(k, rng);
  const auto root2 = numkit::haar_random_unitary(k, rng);
  const EstimationConfig cfg{};
  for (auto _ : state) {
    auto est = htncore::contract_svd(root1, root2, mats, cfg);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_ContractSvdExact)->DenseRange(1, 3);

static void BM_ContractSvdShots(benchmark::State& state) {
  const auto mats = sample_mats(3, 2);
  numkit::Rng rng(22);
  const auto root1 = numkit::haar_random_unitary(3, rng);
  const auto root2 = numkit::haar_random_unitary(3, rng);
  EstimationConfig cfg;
  cfg.mode = htncore::Mode::Shots;
  cfg.shots = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    auto est = htncore::contract_svd(root1, root2, mats, cfg);
    benchmark::DoNotOptimize(est);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ContractSvdShots)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_ContractMonteCarloShots(benchmark::State& state) {
  const auto mats = sample_mats(3, 2);
  numkit::Rng rng(23);
  const auto root1 = numkit::haar_random_unitary(3, rng);
  const auto root2 = numkit::haar_random_unitary(3, rng);
  EstimationConfig cfg;
  cfg.mode = htncore::Mode::Shots;
  cfg.engine = htncore::Engine::MonteCarlo;
  cfg.shots = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    auto est = htncore::contract_montecarlo(root1, root2, mats, cfg);
    benchmark::DoNotOptimize(est);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ContractMonteCarloShots)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_OracleDense(benchmark::State& state) {
  const int k = 3, n = static_cast<int>(state.range(0));
  numkit::Rng rng(24);
  const auto tree = [&] {
    std::vector<htncore::SubsystemMap> leaves;
    for (int m = 0; m < k; ++m) {
      leaves.push_back(htncore::SubsystemMap::indexed(
          numkit::haar_random_unitary(n, rng), numkit::haar_random_unitary(n, rng)));
    }
    return htncore::HTNState(numkit::haar_random_unitary(k, rng), std::move(leaves));
  }();
  for (auto _ : state) {
    auto psi = htncore::oracle_dense(tree);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_OracleDense)->DenseRange(1, 4);

static void BM_NormStudySample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t index = 0;
  for (auto _ : state) {
    auto rng = numkit::substream(25, index++);
    auto s = experiments::draw_norm_sample(n, rng);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_NormStudySample)->DenseRange(1, 7);

BENCHMARK_MAIN();
