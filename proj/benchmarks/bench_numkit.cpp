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

#include "httn/decompositions.hpp"
#include "httn/dense_matrix.hpp"
#include "httn/random.hpp"

using namespace httn;

static void BM_Kron(benchmark::State& state) {
  numkit::Rng rng(1);
  const auto a = numkit::haar_random_unitary(static_cast<int>(state.range(0)), rng);
  const auto b = numkit::haar_random_unitary(2, rng);
  for (auto _ : state) {
    auto out = numkit::kron(a, b);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_Kron)->DenseRange(1, 5);

static void BM_Svd2x2(benchmark::State& state) {
  numkit::Rng rng(2);
  numkit::DenseMatrix m(2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      m(r, c) = numkit::Complex(rng.normal(), rng.normal());
  for (auto _ : state) {
    auto f = numkit::svd(m);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_Svd2x2);

static void BM_EigHermitian2x2(benchmark::State& state) {
  numkit::Rng rng(3);
  numkit::DenseMatrix m(2);
  m(0, 0) = rng.normal();
  m(1, 1) = rng.normal();
  m(0, 1) = numkit::Complex(rng.normal(), rng.normal());
  m(1, 0) = std::conj(m(0, 1));
  for (auto _ : state) {
    auto e = numkit::eig_hermitian(m);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_EigHermitian2x2);

static void BM_HaarUnitary(benchmark::State& state) {
  numkit::Rng rng(4);
  for (auto _ : state) {
    auto u = numkit::haar_random_unitary(static_cast<int>(state.range(0)), rng);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_HaarUnitary)->DenseRange(1, 7);

BENCHMARK_MAIN();
