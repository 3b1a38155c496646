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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "httn/contraction.hpp"
#include "httn/random.hpp"

namespace httn::experiments {

/// Cap on the subsystem size of the random-instance studies.
inline constexpr int kMaxStudyQubits = 8;

/// One random contracted matrix drawn as in the operator-norm study: four
/// Haar unitaries on 2^n and a random Pauli product O, giving entries
/// N^{i'i} = <0|U_{i'}^{(1)†} O U_i^{(2)}|0>.
numkit::DenseMatrix draw_contracted_sample(int n, numkit::Rng& rng);

/// Operator norm and Pauli-coefficient one-norm of one random draw.
struct NormSample {
  double opnorm;
  double gamma;
};

NormSample draw_norm_sample(int n, numkit::Rng& rng);

/// Aggregated statistics of gamma, the operator norm, and their ratio over
/// many random draws at fixed n. Standard deviations are sample sd.
struct NormStudyResult {
  int n = 0;
  std::size_t samples = 0;
  double mean_ratio = 0.0, sd_ratio = 0.0;
  double mean_gamma = 0.0, sd_gamma = 0.0;
  double mean_opnorm = 0.0, sd_opnorm = 0.0;
};

/// Random-matrix statistics per n. Each sample derives its stream from
/// (seed, n, sample index) so results are independent of thread count.
/// threads <= 0 uses the hardware concurrency.
std::vector<NormStudyResult> norm_study(std::span<const int> n_range,
                                        std::size_t samples, std::uint64_t seed,
                                        int threads = 0);

/// RMSE-vs-shots comparison of the SVD and Monte-Carlo contraction engines
/// on seeded random instances sharing one matrix sequence across k.
struct CostScanCell {
  int k = 0;
  htncore::Engine engine = htncore::Engine::Svd;
  std::uint64_t shots = 0;
  double rmse = 0.0;
  double rmse_se = 0.0;          // Gaussian approximation rmse / sqrt(2 repeats)
  numkit::Complex mean_estimate; // across repeats
  double pooled_se = 0.0;        // pooled se of the mean estimate
};

struct CostScanResult {
  std::vector<int> k_range;
  std::vector<std::uint64_t> shots_grid;
  std::size_t repeats = 0;
  std::vector<CostScanCell> cells;

  std::vector<numkit::Complex> exact_values;  // aligned with k_range
  std::vector<double> opnorm_products;        // prod of ||N_m||_op per k
  std::vector<double> gamma_products;         // prod of gamma_m per k

  struct SlopeFit {
    int k = 0;
    htncore::Engine engine = htncore::Engine::Svd;
    double slope = 0.0;  // d log RMSE / d log shots, least squares
  };
  std::vector<SlopeFit> shot_slopes;

  const CostScanCell* cell(int k, htncore::Engine engine,
                           std::uint64_t shots) const;
};

CostScanResult cost_scan(std::span<const int> k_range, int n,
                         std::span<const std::uint64_t> shots_grid,
                         std::size_t repeats, std::uint64_t seed,
                         int threads = 0);

/// CSV with columns n,samples,mean_ratio,sd_ratio,mean_gamma,sd_gamma,
/// mean_opnorm,sd_opnorm; floats carry 10 significant digits.
void write_norm_study_csv(std::ostream& os,
                          std::span<const NormStudyResult> results);

/// CSV with columns k,engine,shots,rmse,stderr.
void write_cost_scan_csv(std::ostream& os, const CostScanResult& result);

const char* engine_name(htncore::Engine engine);

}  // namespace httn::experiments
