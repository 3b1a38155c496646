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

#include "httn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <thread>

#include "httn/decompositions.hpp"
#include "httn/errors.hpp"
#include "httn/statevector.hpp"

namespace httn::experiments {

namespace {

using numkit::Complex;
using numkit::DenseMatrix;
using numkit::Rng;

// Substream index spaces; keeps the per-task streams of a study disjoint.
constexpr std::uint64_t kNormStream = 0x100000000ULL;
constexpr std::uint64_t kMatStream = 0x200000000ULL;
constexpr std::uint64_t kRootStream = 0x300000000ULL;
constexpr std::uint64_t kRepeatStream = 0x400000000ULL;

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body) {
  unsigned int t = threads > 0 ? static_cast<unsigned int>(threads)
                               : std::thread::hardware_concurrency();
  if (t < 1) t = 1;
  t = std::min<unsigned int>(t, static_cast<unsigned int>(std::max<std::size_t>(count, 1)));
  if (t == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned int w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += t) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

MeanSd mean_sd(std::span<const double> values) {
  MeanSd out;
  const double n = static_cast<double>(values.size());
  if (values.empty()) return out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() < 2) return out;
  double acc = 0.0;
  for (double v : values) acc += (v - out.mean) * (v - out.mean);
  out.sd = std::sqrt(acc / (n - 1.0));
  return out;
}

void check_study_qubits(int n) {
  if (n < 1 || n > kMaxStudyQubits) {
    throw CapacityError("study subsystem size n = " + std::to_string(n) +
                        " outside [1, " + std::to_string(kMaxStudyQubits) + "]");
  }
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  return denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
}

void print_float(std::ostream& os, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  os << buf;
}

}  // namespace

DenseMatrix draw_contracted_sample(int n, Rng& rng) {
  check_study_qubits(n);
  const DenseMatrix u1[2] = {numkit::haar_random_unitary(n, rng),
                             numkit::haar_random_unitary(n, rng)};
  const DenseMatrix u2[2] = {numkit::haar_random_unitary(n, rng),
                             numkit::haar_random_unitary(n, rng)};
  const auto labels = numkit::random_pauli_string(n, rng);

  DenseMatrix out(2);
  statesim::Statevector bras[2] = {statesim::prepare(u1[0], n),
                                   statesim::prepare(u1[1], n)};
  for (int col = 0; col < 2; ++col) {
    auto ket = statesim::prepare(u2[col], n);
    for (int site = 0; site < n; ++site) {
      const auto label = labels[static_cast<std::size_t>(site)];
      if (label == numkit::Pauli::I) continue;
      ket = statesim::apply_local(ket, site, numkit::pauli_matrix(label));
    }
    for (int row = 0; row < 2; ++row) {
      out(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
          statesim::inner(bras[row], ket);
    }
  }
  return out;
}

NormSample draw_norm_sample(int n, Rng& rng) {
  const DenseMatrix mat = draw_contracted_sample(n, rng);
  return {numkit::svd(mat).opnorm, numkit::pauli_decompose(mat).gamma};
}

std::vector<NormStudyResult> norm_study(std::span<const int> n_range,
                                        std::size_t samples, std::uint64_t seed,
                                        int threads) {
  if (samples < 100) throw ContractViolation("norm_study requires samples >= 100");
  for (int n : n_range) check_study_qubits(n);

  std::vector<NormStudyResult> results;
  results.reserve(n_range.size());
  std::vector<double> ratios(samples), gammas(samples), opnorms(samples);
  for (int n : n_range) {
    parallel_for(samples, threads, [&, n](std::size_t s) {
      auto rng = numkit::substream(
          seed, kNormStream + (static_cast<std::uint64_t>(n) << 24) + s);
      const NormSample sample = draw_norm_sample(n, rng);
      opnorms[s] = sample.opnorm;
      gammas[s] = sample.gamma;
      ratios[s] = sample.gamma / sample.opnorm;
    });
    // gamma bounds the operator norm for every draw; a violation means the
    // decomposition kernels disagree.
    for (double r : ratios) {
      if (!(r >= 1.0 - 1e-9)) {
        throw std::logic_error("norm-study sample with gamma below the operator norm");
      }
    }
    NormStudyResult r;
    r.n = n;
    r.samples = samples;
    const auto ratio = mean_sd(ratios);
    const auto gamma = mean_sd(gammas);
    const auto opnorm = mean_sd(opnorms);
    r.mean_ratio = ratio.mean;
    r.sd_ratio = ratio.sd;
    r.mean_gamma = gamma.mean;
    r.sd_gamma = gamma.sd;
    r.mean_opnorm = opnorm.mean;
    r.sd_opnorm = opnorm.sd;
    results.push_back(r);
  }
  return results;
}

const CostScanCell* CostScanResult::cell(int k, htncore::Engine engine,
                                         std::uint64_t shots) const {
  for (const auto& c : cells) {
    if (c.k == k && c.engine == engine && c.shots == shots) return &c;
  }
  return nullptr;
}

CostScanResult cost_scan(std::span<const int> k_range, int n,
                         std::span<const std::uint64_t> shots_grid,
                         std::size_t repeats, std::uint64_t seed, int threads) {
  check_study_qubits(n);
  if (k_range.empty() || shots_grid.empty() || repeats < 2) {
    throw ContractViolation("cost_scan needs subsystems, a shot grid, and repeats >= 2");
  }
  int max_k = 0;
  for (int k : k_range) {
    if (k < 1 || k > htncore::kMaxExactMonteCarloSubsystems) {
      throw CapacityError("cost_scan k outside supported range");
    }
    if (k * n > htncore::kMaxOracleQubits) {
      throw CapacityError("cost_scan instance exceeds oracle capacity");
    }
    max_k = std::max(max_k, k);
  }

  // One shared matrix sequence: instance k contracts mats[0..k), so growing
  // k extends the same family instead of redrawing it.
  std::vector<htncore::ContractedMatrix> mats;
  std::vector<double> mat_opnorm, mat_gamma;
  for (int m = 0; m < max_k; ++m) {
    auto rng = numkit::substream(seed, kMatStream + static_cast<std::uint64_t>(m));
    const DenseMatrix sample = draw_contracted_sample(n, rng);
    mats.push_back(htncore::ContractedMatrix(
        {{{sample(0, 0), sample(0, 1)}, {sample(1, 0), sample(1, 1)}}},
        htncore::Role::NonHermitianN));
    mat_opnorm.push_back(numkit::svd(sample).opnorm);
    mat_gamma.push_back(numkit::pauli_decompose(sample).gamma);
  }

  CostScanResult result;
  result.k_range.assign(k_range.begin(), k_range.end());
  result.shots_grid.assign(shots_grid.begin(), shots_grid.end());
  result.repeats = repeats;

  const htncore::Engine engines[2] = {htncore::Engine::Svd,
                                      htncore::Engine::MonteCarlo};

  for (std::size_t ki = 0; ki < k_range.size(); ++ki) {
    const int k = k_range[ki];
    auto root_rng =
        numkit::substream(seed, kRootStream + static_cast<std::uint64_t>(k));
    const DenseMatrix root1 = numkit::haar_random_unitary(k, root_rng);
    const DenseMatrix root2 = numkit::haar_random_unitary(k, root_rng);
    const std::span<const htncore::ContractedMatrix> used(mats.data(),
                                                          static_cast<std::size_t>(k));

    // Exact reference straight from the 2x2 matrices.
    DenseMatrix product = used[0].dense();
    for (int m = 1; m < k; ++m) product = numkit::kron(product, used[static_cast<std::size_t>(m)].dense());
    const auto psi1 = statesim::prepare(root1, k);
    const auto psi2 = statesim::prepare(root2, k);
    const Complex exact =
        numkit::inner_product(psi1.amps(), product.apply(psi2.amps()));
    result.exact_values.push_back(exact);

    double opnorm_prod = 1.0, gamma_prod = 1.0;
    for (int m = 0; m < k; ++m) {
      opnorm_prod *= mat_opnorm[static_cast<std::size_t>(m)];
      gamma_prod *= mat_gamma[static_cast<std::size_t>(m)];
    }
    result.opnorm_products.push_back(opnorm_prod);
    result.gamma_products.push_back(gamma_prod);

    for (const auto engine : engines) {
      std::vector<double> log_shots, log_rmse;
      for (std::size_t si = 0; si < shots_grid.size(); ++si) {
        const std::uint64_t shots = shots_grid[si];
        std::vector<Complex> estimates(repeats);
        parallel_for(repeats, threads, [&](std::size_t r) {
          htncore::EstimationConfig cfg;
          cfg.mode = htncore::Mode::Shots;
          cfg.engine = engine;
          cfg.shots = shots;
          cfg.seed = numkit::mix_seed(
              seed, kRepeatStream +
                        ((((static_cast<std::uint64_t>(ki) * 2 +
                            (engine == htncore::Engine::Svd ? 0 : 1)) *
                               shots_grid.size() +
                           si) *
                              repeats +
                          r)));
          const auto est = engine == htncore::Engine::Svd
                               ? htncore::contract_svd(root1, root2, used, cfg)
                               : htncore::contract_montecarlo(root1, root2, used, cfg);
          estimates[r] = est.value;
        });

        CostScanCell cell;
        cell.k = k;
        cell.engine = engine;
        cell.shots = shots;
        double err_sq = 0.0;
        Complex mean = 0.0;
        for (const auto& e : estimates) {
          err_sq += std::norm(e - exact);
          mean += e;
        }
        mean /= static_cast<double>(repeats);
        cell.rmse = std::sqrt(err_sq / static_cast<double>(repeats));
        cell.rmse_se = cell.rmse / std::sqrt(2.0 * static_cast<double>(repeats));
        cell.mean_estimate = mean;
        double var_re = 0.0, var_im = 0.0;
        for (const auto& e : estimates) {
          var_re += (e.real() - mean.real()) * (e.real() - mean.real());
          var_im += (e.imag() - mean.imag()) * (e.imag() - mean.imag());
        }
        const double denom = static_cast<double>(repeats) *
                             (static_cast<double>(repeats) - 1.0);
        cell.pooled_se = std::sqrt(var_re / denom + var_im / denom);
        result.cells.push_back(cell);

        if (cell.rmse > 0.0) {
          log_shots.push_back(std::log(static_cast<double>(shots)));
          log_rmse.push_back(std::log(cell.rmse));
        }
      }
      if (log_shots.size() >= 2) {
        result.shot_slopes.push_back({k, engine, fit_slope(log_shots, log_rmse)});
      }
    }
  }
  return result;
}

const char* engine_name(htncore::Engine engine) {
  switch (engine) {
    case htncore::Engine::Spectral: return "spectral";
    case htncore::Engine::Svd: return "svd";
    case htncore::Engine::MonteCarlo: return "montecarlo";
  }
  return "unknown";
}

void write_norm_study_csv(std::ostream& os,
                          std::span<const NormStudyResult> results) {
  os << "n,samples,mean_ratio,sd_ratio,mean_gamma,sd_gamma,mean_opnorm,sd_opnorm\n";
  for (const auto& r : results) {
    os << r.n << ',' << r.samples << ',';
    print_float(os, r.mean_ratio);
    os << ',';
    print_float(os, r.sd_ratio);
    os << ',';
    print_float(os, r.mean_gamma);
    os << ',';
    print_float(os, r.sd_gamma);
    os << ',';
    print_float(os, r.mean_opnorm);
    os << ',';
    print_float(os, r.sd_opnorm);
    os << '\n';
  }
}

void write_cost_scan_csv(std::ostream& os, const CostScanResult& result) {
  os << "k,engine,shots,rmse,stderr\n";
  for (const auto& c : result.cells) {
    os << c.k << ',' << engine_name(c.engine) << ',' << c.shots << ',';
    print_float(os, c.rmse);
    os << ',';
    print_float(os, c.rmse_se);
    os << '\n';
  }
}

}  // namespace httn::experiments
