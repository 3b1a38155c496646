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

#include "httn/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "httn/decompositions.hpp"
#include "httn/errors.hpp"
#include "httn/hadamard_test.hpp"
#include "httn/random.hpp"

namespace httn::htncore {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct RunningStats {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t count = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++count;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double std_error() const {
    if (count < 2) return 0.0;
    const double n = static_cast<double>(count);
    const double m = mean();
    const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1.0));
    return std::sqrt(var / n);
  }
};

struct ComplexStats {
  RunningStats re, im;

  void add(Complex v) {
    re.add(v.real());
    im.add(v.imag());
  }
  Complex mean() const { return {re.mean(), im.mean()}; }
  double pooled_se() const {
    return std::hypot(re.std_error(), im.std_error());
  }
};

struct EstimateCore {
  Complex value;
  double std_error = 0.0;
};

// Shot bookkeeping for one pipeline (or one standalone call). Every
// measurement setting takes the next substream of the root seed, so results
// do not depend on how settings would be scheduled.
struct MeasurePlan {
  Mode mode = Mode::Exact;
  Split split = Split::Stratified;
  std::uint64_t construction_shots = 0;  // per setting
  std::uint64_t contraction_shots = 0;   // per setting
  std::uint64_t seed = 0;
  std::uint64_t next_index = 0;
  std::uint64_t consumed = 0;

  numkit::Rng next_rng() { return numkit::substream(seed, next_index++); }
};

MeasurePlan plan_for(const EstimationConfig& cfg, std::uint64_t settings) {
  MeasurePlan p;
  p.mode = cfg.mode;
  p.split = cfg.split;
  p.seed = cfg.seed;
  if (cfg.mode == Mode::Shots) {
    if (cfg.shots < 1) throw ContractViolation("shot mode requires shots >= 1");
    const std::uint64_t per =
        std::max<std::uint64_t>(1, cfg.shots / std::max<std::uint64_t>(1, settings));
    p.construction_shots = cfg.construction_shots_per_setting
                               ? cfg.construction_shots_per_setting
                               : per;
    p.contraction_shots = cfg.contraction_shots_per_setting
                              ? cfg.contraction_shots_per_setting
                              : per;
  }
  return p;
}

using WeightFn = std::function<double(std::uint64_t)>;

const WeightFn kUnitWeight = [](std::uint64_t) { return 1.0; };

std::vector<int> all_sites(int qubits) {
  std::vector<int> sites(static_cast<std::size_t>(qubits));
  std::iota(sites.begin(), sites.end(), 0);
  return sites;
}

// One measurement setting: estimate E[b * f(bits)] for a fixed ancilla phase.
RunningStats measure_setting(const statesim::HadamardTestSpec& spec,
                             const WeightFn& weight, MeasurePlan& plan,
                             std::uint64_t shots) {
  auto rng = plan.next_rng();
  const auto dist = statesim::hadamard_test_distribution(spec);
  RunningStats stats;
  if (plan.mode == Mode::Exact) {
    stats.sum = statesim::weighted_ancilla_mean(dist, weight);
    stats.count = 1;
    return stats;
  }
  const auto draws = statesim::sample(dist, shots, rng);
  plan.consumed += shots;
  for (const auto& [b, bits] : draws) stats.add(b * weight(bits));
  return stats;
}

struct WeightedBranches {
  statesim::Statevector branch0;
  statesim::Statevector branch1;
  std::vector<int> measured;
  WeightFn weight;
};

// Rotate both branches into the observable eigenbasis; identity observables
// skip the system measurement entirely.
WeightedBranches rotated_pair(const statesim::Statevector& phi0,
                              const statesim::Statevector& phi1,
                              const SubsystemObservable& obs) {
  if (obs.is_identity()) {
    return {phi0, phi1, {}, kUnitWeight};
  }
  return {obs.apply_diagonalizer(phi0), obs.apply_diagonalizer(phi1),
          all_sites(obs.qubits()),
          [&obs](std::uint64_t bits) { return obs.outcome_weight(bits); }};
}

// Complex entry <phi0|O|phi1> from two Hadamard-test settings (alpha 0, pi/2).
Complex measure_complex_entry(const WeightedBranches& wb, MeasurePlan& plan,
                              std::uint64_t shots) {
  const auto re = measure_setting({wb.branch0, wb.branch1, 0.0, wb.measured},
                                  wb.weight, plan, shots);
  const auto im = measure_setting({wb.branch0, wb.branch1, kHalfPi, wb.measured},
                                  wb.weight, plan, shots);
  return {re.mean(), im.mean()};
}

// Direct expectation <phi|O|phi> (degenerate Hadamard test, ancilla fixed).
double measure_direct(const statesim::Statevector& phi,
                      const SubsystemObservable& obs, MeasurePlan& plan,
                      std::uint64_t shots) {
  const auto wb = rotated_pair(phi, phi, obs);
  return measure_setting({wb.branch0, wb.branch1, 0.0, wb.measured}, wb.weight,
                         plan, shots)
      .mean();
}

statesim::Statevector init_mapped_state(const SubsystemMap& leaf, int which) {
  // which: 0, 1, 2 = |+>, 3 = |+y> on the leading qubit, |0...0> behind it.
  const int n = leaf.qubits();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> base(dim);
  const double r = 1.0 / std::sqrt(2.0);
  switch (which) {
    case 0: base[0] = 1.0; break;
    case 1: base[dim >> 1] = 1.0; break;
    case 2: base[0] = r; base[dim >> 1] = r; break;
    default: base[0] = r; base[dim >> 1] = Complex(0.0, r); break;
  }
  return statesim::apply_dense(statesim::Statevector(n, std::move(base)),
                               leaf.unitary());
}

ContractedMatrix build_M_impl(const SubsystemMap& leaf,
                              const SubsystemObservable& obs, MeasurePlan& plan) {
  if (obs.qubits() != leaf.qubits()) {
    throw ContractViolation("observable and subsystem sizes differ");
  }
  std::array<std::array<Complex, 2>, 2> e;
  if (!leaf.init_state_mapped()) {
    const auto phi0 = leaf.leaf_state(0);
    const auto phi1 = leaf.leaf_state(1);
    const double m00 = measure_direct(phi0, obs, plan, plan.construction_shots);
    const double m11 = measure_direct(phi1, obs, plan, plan.construction_shots);
    const auto wb = rotated_pair(phi0, phi1, obs);
    const Complex m01 = measure_complex_entry(wb, plan, plan.construction_shots);
    e = {{{Complex(m00), m01}, {std::conj(m01), Complex(m11)}}};
  } else {
    // Four direct expectations on |0>, |1>, |+>, |+y> initial states combine
    // into the off-diagonal element.
    double ev[4];
    for (int which = 0; which < 4; ++which) {
      ev[which] = measure_direct(init_mapped_state(leaf, which), obs, plan,
                                 plan.construction_shots);
    }
    const Complex i(0.0, 1.0);
    const Complex m01 =
        (i - 1.0) / 2.0 * (ev[0] + ev[1]) + ev[2] - i * ev[3];
    e = {{{Complex(ev[0]), m01}, {std::conj(m01), Complex(ev[1])}}};
  }
  return ContractedMatrix(e, Role::HermitianM);
}

ContractedMatrix build_MA_impl(const SubsystemMap& leaf, MeasurePlan& plan) {
  if (leaf.init_state_mapped()) {
    return ContractedMatrix::identity(Role::OverlapMA);
  }
  const WeightedBranches wb{leaf.leaf_state(0), leaf.leaf_state(1), {}, kUnitWeight};
  const Complex m01 = measure_complex_entry(wb, plan, plan.construction_shots);
  return ContractedMatrix({{{Complex(1.0), m01}, {std::conj(m01), Complex(1.0)}}},
                          Role::OverlapMA);
}

ContractedMatrix build_N_impl(const SubsystemMap& leaf1, const SubsystemMap& leaf2,
                              const SubsystemObservable& obs, MeasurePlan& plan) {
  if (leaf1.qubits() != leaf2.qubits()) {
    throw ContractViolation("subsystem sizes differ between states");
  }
  if (obs.qubits() != leaf1.qubits()) {
    throw ContractViolation("observable and subsystem sizes differ");
  }
  std::array<std::array<Complex, 2>, 2> e;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      const auto wb = rotated_pair(leaf1.leaf_state(row), leaf2.leaf_state(col), obs);
      e[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
          measure_complex_entry(wb, plan, plan.construction_shots);
    }
  }
  return ContractedMatrix(e, Role::NonHermitianN);
}

int subsystem_count_for(const DenseMatrix& root,
                        std::span<const ContractedMatrix> mats) {
  const int k = static_cast<int>(mats.size());
  if (k < 1) throw ContractViolation("contraction needs at least one matrix");
  if (root.dim() != (std::size_t{1} << k)) {
    throw ContractViolation("root dimension does not match matrix count");
  }
  return k;
}

EstimateCore contract_hermitian_impl(const DenseMatrix& root,
                                     std::span<const ContractedMatrix> mats,
                                     MeasurePlan& plan) {
  const int k = subsystem_count_for(root, mats);
  for (const auto& m : mats) {
    if (m.role() == Role::NonHermitianN) {
      throw ContractViolation(
          "spectral contraction requires Hermitian contracted matrices");
    }
  }

  std::vector<numkit::SpectralDecomposition> eigs;
  eigs.reserve(mats.size());
  for (const auto& m : mats) eigs.push_back(numkit::eig_hermitian(m.dense(), 1e-8));

  auto state = statesim::prepare(root, k);
  for (int m = 0; m < k; ++m) {
    state = statesim::apply_local(state, m, eigs[static_cast<std::size_t>(m)].rotation);
  }
  const WeightFn weight = [&eigs, k](std::uint64_t bits) {
    double w = 1.0;
    for (int m = 0; m < k; ++m) {
      const std::uint64_t bit = (bits >> (k - 1 - m)) & 1u;
      w *= eigs[static_cast<std::size_t>(m)].eigenvalues[bit];
    }
    return w;
  };

  const auto stats = measure_setting({state, state, 0.0, all_sites(k)}, weight,
                                     plan, plan.contraction_shots);
  return {Complex(stats.mean(), 0.0), stats.std_error()};
}

// Draws from a fixed cumulative table; shared by the shot loops below.
struct TableSampler {
  std::vector<double> cumulative;
  const statesim::JointOutcomeDistribution* dist = nullptr;

  explicit TableSampler(const statesim::JointOutcomeDistribution& d) : dist(&d) {
    cumulative.reserve(d.entries().size());
    double acc = 0.0;
    for (const auto& e : d.entries()) {
      acc += e.prob;
      cumulative.push_back(acc);
    }
  }
  std::pair<int, std::uint64_t> draw(numkit::Rng& rng) const {
    const double u = rng.uniform01() * cumulative.back();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx =
        std::min(static_cast<std::size_t>(it - cumulative.begin()),
                 dist->entries().size() - 1);
    const auto& e = dist->entries()[idx];
    return {e.ancilla, e.bits};
  }
};

EstimateCore contract_svd_impl(const DenseMatrix& root1, const DenseMatrix& root2,
                               std::span<const ContractedMatrix> mats,
                               MeasurePlan& plan) {
  const int k = subsystem_count_for(root1, mats);
  if (root2.dim() != root1.dim()) {
    throw ContractViolation("root dimensions differ");
  }

  std::vector<numkit::SVDFactors> factors;
  factors.reserve(mats.size());
  double prefactor = 1.0;
  for (const auto& m : mats) {
    factors.push_back(numkit::svd(m.dense()));
    prefactor *= factors.back().opnorm;
  }
  if (prefactor == 0.0) {
    return {Complex(0.0), 0.0};  // some N_m vanishes, so does the product
  }

  auto branch0 = statesim::prepare(root1, k);
  auto branch1 = statesim::prepare(root2, k);
  for (int m = 0; m < k; ++m) {
    branch0 = statesim::apply_local(branch0, m, factors[static_cast<std::size_t>(m)].left);
    branch1 = statesim::apply_local(branch1, m, factors[static_cast<std::size_t>(m)].right);
  }
  // Rescaled singular values: leading one is exactly 1 by construction.
  const WeightFn weight = [&factors, k](std::uint64_t bits) {
    double w = 1.0;
    for (int m = 0; m < k; ++m) {
      const auto& f = factors[static_cast<std::size_t>(m)];
      const std::uint64_t bit = (bits >> (k - 1 - m)) & 1u;
      w *= f.singulars[bit] / f.opnorm;
    }
    return w;
  };

  const auto sites = all_sites(k);
  const auto dist_re =
      statesim::hadamard_test_distribution({branch0, branch1, 0.0, sites});
  const auto dist_im =
      statesim::hadamard_test_distribution({branch0, branch1, kHalfPi, sites});

  if (plan.mode == Mode::Exact) {
    plan.next_index++;  // keep setting indices aligned with shot mode
    const double re = statesim::weighted_ancilla_mean(dist_re, weight);
    const double im = statesim::weighted_ancilla_mean(dist_im, weight);
    return {prefactor * Complex(re, im), 0.0};
  }

  auto rng = plan.next_rng();
  const std::uint64_t shots = plan.contraction_shots;
  const TableSampler sampler_re(dist_re), sampler_im(dist_im);

  if (plan.split == Split::Stratified) {
    const std::uint64_t shots_re = (shots + 1) / 2;
    const std::uint64_t shots_im = shots - shots_re;
    RunningStats re, im;
    for (std::uint64_t s = 0; s < shots_re; ++s) {
      const auto [b, bits] = sampler_re.draw(rng);
      re.add(b * weight(bits));
    }
    for (std::uint64_t s = 0; s < shots_im; ++s) {
      const auto [b, bits] = sampler_im.draw(rng);
      im.add(b * weight(bits));
    }
    plan.consumed += shots;
    return {prefactor * Complex(re.mean(), im.mean()),
            prefactor * std::hypot(re.std_error(), im.std_error())};
  }

  // Randomized split: fair coin per shot, factor 2 restores the estimand.
  ComplexStats stats;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const bool imaginary_part = rng.uniform01() < 0.5;
    const auto [b, bits] =
        imaginary_part ? sampler_im.draw(rng) : sampler_re.draw(rng);
    const double v = 2.0 * prefactor * b * weight(bits);
    stats.add(imaginary_part ? Complex(0.0, v) : Complex(v, 0.0));
  }
  plan.consumed += shots;
  return {stats.mean(), stats.pooled_se()};
}

EstimateCore contract_montecarlo_impl(const DenseMatrix& root1,
                                      const DenseMatrix& root2,
                                      std::span<const ContractedMatrix> mats,
                                      MeasurePlan& plan) {
  const int k = subsystem_count_for(root1, mats);
  if (root2.dim() != root1.dim()) {
    throw ContractViolation("root dimensions differ");
  }

  std::vector<numkit::PauliDecomposition> decomps;
  decomps.reserve(mats.size());
  double gamma_product = 1.0;
  for (const auto& m : mats) {
    decomps.push_back(numkit::pauli_decompose(m.dense()));
    gamma_product *= decomps.back().gamma;
  }
  if (gamma_product == 0.0) {
    return {Complex(0.0), 0.0};  // some N_m vanishes
  }

  const auto psi1 = statesim::prepare(root1, k);
  const auto psi2 = statesim::prepare(root2, k);

  // <psi1| ⊗_m sigma_{s_m} |psi2> for a packed base-4 string.
  const auto string_overlap = [&](std::uint64_t key) {
    auto state = psi2;
    for (int m = 0; m < k; ++m) {
      const auto label =
          static_cast<numkit::Pauli>((key >> (2 * m)) & 3u);
      if (label == numkit::Pauli::I) continue;
      state = statesim::apply_local(state, m, numkit::pauli_matrix(label));
    }
    return statesim::inner(psi1, state);
  };

  if (plan.mode == Mode::Exact) {
    if (k > kMaxExactMonteCarloSubsystems) {
      throw CapacityError(
          "exact Monte-Carlo contraction enumerates 4^k terms; k " +
          std::to_string(k) + " exceeds cap " +
          std::to_string(kMaxExactMonteCarloSubsystems));
    }
    plan.next_index++;
    Complex total = 0.0;
    const std::uint64_t strings = std::uint64_t{1} << (2 * k);
    for (std::uint64_t key = 0; key < strings; ++key) {
      Complex coeff = 1.0;
      for (int m = 0; m < k; ++m) {
        coeff *= decomps[static_cast<std::size_t>(m)]
                     .coeffs[(key >> (2 * m)) & 3u];
        if (coeff == 0.0) break;
      }
      if (coeff == 0.0) continue;
      total += coeff * string_overlap(key);
    }
    return {total, 0.0};
  }

  auto rng = plan.next_rng();
  const std::uint64_t shots = plan.contraction_shots;

  std::vector<std::array<double, 4>> cumulative(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m) {
    double acc = 0.0;
    for (int q = 0; q < 4; ++q) {
      acc += decomps[static_cast<std::size_t>(m)].probs[static_cast<std::size_t>(q)];
      cumulative[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)] = acc;
    }
  }
  std::unordered_map<std::uint64_t, Complex> overlap_cache;

  const auto draw_string = [&](numkit::Rng& r) {
    std::uint64_t key = 0;
    double phase_sum = 0.0;
    for (int m = 0; m < k; ++m) {
      const auto& cum = cumulative[static_cast<std::size_t>(m)];
      const double u = r.uniform01() * cum[3];
      int q = 0;
      while (q < 3 && u >= cum[static_cast<std::size_t>(q)]) ++q;
      key |= static_cast<std::uint64_t>(q) << (2 * m);
      phase_sum += decomps[static_cast<std::size_t>(m)]
                       .phases[static_cast<std::size_t>(q)];
    }
    return std::pair<std::uint64_t, double>{key, phase_sum};
  };
  const auto cached_overlap = [&](std::uint64_t key) {
    auto it = overlap_cache.find(key);
    if (it == overlap_cache.end()) {
      it = overlap_cache.emplace(key, string_overlap(key)).first;
    }
    return it->second;
  };
  const auto draw_ancilla = [&](double expectation, numkit::Rng& r) {
    const double p_plus = std::clamp((1.0 + expectation) / 2.0, 0.0, 1.0);
    return r.uniform01() < p_plus ? +1 : -1;
  };

  if (plan.split == Split::Stratified) {
    const std::uint64_t shots_re = (shots + 1) / 2;
    const std::uint64_t shots_im = shots - shots_re;
    ComplexStats re_part, im_part;
    for (std::uint64_t s = 0; s < shots_re; ++s) {
      const auto [key, phase_sum] = draw_string(rng);
      const Complex z = cached_overlap(key);
      const int b = draw_ancilla(z.real(), rng);
      re_part.add(gamma_product * std::polar(1.0, phase_sum) *
                  static_cast<double>(b));
    }
    for (std::uint64_t s = 0; s < shots_im; ++s) {
      const auto [key, phase_sum] = draw_string(rng);
      const Complex z = cached_overlap(key);
      const int b = draw_ancilla(z.imag(), rng);
      im_part.add(Complex(0.0, 1.0) * gamma_product *
                  std::polar(1.0, phase_sum) * static_cast<double>(b));
    }
    plan.consumed += shots;
    const Complex value = re_part.mean() + im_part.mean();
    const double se_re =
        std::hypot(re_part.re.std_error(), im_part.re.std_error());
    const double se_im =
        std::hypot(re_part.im.std_error(), im_part.im.std_error());
    return {value, std::hypot(se_re, se_im)};
  }

  ComplexStats stats;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const auto [key, phase_sum] = draw_string(rng);
    const Complex z = cached_overlap(key);
    const bool imaginary_part = rng.uniform01() < 0.5;
    const int b = draw_ancilla(imaginary_part ? z.imag() : z.real(), rng);
    Complex v = 2.0 * gamma_product * std::polar(1.0, phase_sum) *
                static_cast<double>(b);
    if (imaginary_part) v *= Complex(0.0, 1.0);
    stats.add(v);
  }
  plan.consumed += shots;
  return {stats.mean(), stats.pooled_se()};
}

EstimateCore dispatch_engine(Engine engine, const DenseMatrix& root1,
                             const DenseMatrix& root2,
                             std::span<const ContractedMatrix> mats,
                             MeasurePlan& plan) {
  switch (engine) {
    case Engine::Spectral:
      if (root1.max_abs_diff(root2) != 0.0) {
        throw ContractViolation("spectral engine contracts a single state");
      }
      return contract_hermitian_impl(root1, mats, plan);
    case Engine::Svd:
      return contract_svd_impl(root1, root2, mats, plan);
    case Engine::MonteCarlo:
      return contract_montecarlo_impl(root1, root2, mats, plan);
  }
  throw ContractViolation("unknown engine");
}

std::uint64_t ma_settings(const HTNState& state) {
  std::uint64_t n = 0;
  for (const auto& leaf : state.leaves()) {
    if (!leaf.init_state_mapped()) n += 2;
  }
  return n;
}

double normalization_impl(const HTNState& state, MeasurePlan& plan) {
  if (state.all_init_state_mapped()) return 1.0;
  std::vector<ContractedMatrix> mats;
  mats.reserve(state.leaves().size());
  for (const auto& leaf : state.leaves()) mats.push_back(build_MA_impl(leaf, plan));
  const auto core = contract_hermitian_impl(state.root(), mats, plan);
  const double a_squared = core.value.real();
  if (a_squared <= 0.0) {
    throw DegenerateNormalization(
        "normalization estimate A^2 = " + std::to_string(a_squared) +
        " is not positive; increase shots");
  }
  return std::sqrt(a_squared);
}

std::vector<SubsystemObservable> resolve_observables(
    std::span<const SubsystemObservable> obs, const HTNState& state) {
  const auto k = static_cast<std::size_t>(state.subsystem_count());
  std::vector<SubsystemObservable> out;
  out.reserve(k);
  if (obs.empty()) {
    for (std::size_t m = 0; m < k; ++m) {
      out.push_back(SubsystemObservable::identity(state.subsystem_qubits()));
    }
    return out;
  }
  if (obs.size() != k) {
    throw ContractViolation("need one observable per subsystem");
  }
  out.assign(obs.begin(), obs.end());
  return out;
}

}  // namespace

ContractedMatrix::ContractedMatrix(std::array<std::array<Complex, 2>, 2> entries,
                                   Role role)
    : entries_(entries), role_(role) {
  for (const auto& row : entries_) {
    for (const auto& v : row) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw ContractViolation("contracted matrix entries must be finite");
      }
    }
  }
  if (role_ == Role::HermitianM || role_ == Role::OverlapMA) {
    if (!hermitian(1e-8)) {
      throw ContractViolation("Hermitian contracted matrix fails symmetry check");
    }
  }
  if (role_ == Role::OverlapMA) {
    if (std::abs(entries_[0][0] - 1.0) > 1e-8 ||
        std::abs(entries_[1][1] - 1.0) > 1e-8) {
      throw ContractViolation("overlap matrix diagonal must be 1");
    }
  }
}

ContractedMatrix ContractedMatrix::identity(Role role) {
  return ContractedMatrix({{{Complex(1.0), Complex(0.0)},
                            {Complex(0.0), Complex(1.0)}}},
                          role);
}

DenseMatrix ContractedMatrix::dense() const {
  DenseMatrix m(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = at(r, c);
  return m;
}

bool ContractedMatrix::hermitian(double tol) const {
  return std::abs(entries_[0][0].imag()) <= tol &&
         std::abs(entries_[1][1].imag()) <= tol &&
         std::abs(entries_[0][1] - std::conj(entries_[1][0])) <= tol;
}

ContractedMatrix build_M(const SubsystemMap& leaf, const SubsystemObservable& obs,
                         const EstimationConfig& cfg) {
  auto plan = plan_for(cfg, 4);
  return build_M_impl(leaf, obs, plan);
}

ContractedMatrix build_MA(const SubsystemMap& leaf, const EstimationConfig& cfg) {
  auto plan = plan_for(cfg, leaf.init_state_mapped() ? 0 : 2);
  return build_MA_impl(leaf, plan);
}

ContractedMatrix build_N(const SubsystemMap& leaf1, const SubsystemMap& leaf2,
                         const SubsystemObservable& obs, const EstimationConfig& cfg) {
  auto plan = plan_for(cfg, 8);
  return build_N_impl(leaf1, leaf2, obs, plan);
}

ShotEstimate contract_hermitian(const DenseMatrix& root,
                                std::span<const ContractedMatrix> mats,
                                const EstimationConfig& cfg) {
  auto plan = plan_for(cfg, 1);
  const auto core = contract_hermitian_impl(root, mats, plan);
  return {core.value, core.std_error, plan.consumed, cfg.seed};
}

ShotEstimate contract_svd(const DenseMatrix& root1, const DenseMatrix& root2,
                          std::span<const ContractedMatrix> mats,
                          const EstimationConfig& cfg) {
  auto plan = plan_for(cfg, 1);
  const auto core = contract_svd_impl(root1, root2, mats, plan);
  return {core.value, core.std_error, plan.consumed, cfg.seed};
}

ShotEstimate contract_montecarlo(const DenseMatrix& root1, const DenseMatrix& root2,
                                 std::span<const ContractedMatrix> mats,
                                 const EstimationConfig& cfg) {
  auto plan = plan_for(cfg, 1);
  const auto core = contract_montecarlo_impl(root1, root2, mats, plan);
  return {core.value, core.std_error, plan.consumed, cfg.seed};
}

double normalization(const HTNState& state, const EstimationConfig& cfg) {
  auto plan = plan_for(cfg, ma_settings(state) +
                                (state.all_init_state_mapped() ? 0 : 1));
  return normalization_impl(state, plan);
}

ShotEstimate expectation(const HTNState& state,
                         std::span<const SubsystemObservable> obs,
                         const EstimationConfig& cfg) {
  const auto observables = resolve_observables(obs, state);
  const std::uint64_t settings =
      4 * static_cast<std::uint64_t>(state.subsystem_count()) +
      ma_settings(state) + 1 + (state.all_init_state_mapped() ? 0 : 1);
  auto plan = plan_for(cfg, settings);

  std::vector<ContractedMatrix> mats;
  mats.reserve(observables.size());
  for (int m = 0; m < state.subsystem_count(); ++m) {
    mats.push_back(build_M_impl(state.leaf(m),
                                observables[static_cast<std::size_t>(m)], plan));
  }
  const double a = normalization_impl(state, plan);
  const auto core =
      dispatch_engine(cfg.engine, state.root(), state.root(), mats, plan);
  const double a_squared = a * a;
  return {core.value / a_squared, core.std_error / a_squared, plan.consumed,
          cfg.seed};
}

ShotEstimate transition_amplitude(const HTNState& s1, const HTNState& s2,
                                  std::span<const SubsystemObservable> obs,
                                  const EstimationConfig& cfg) {
  if (s1.subsystem_count() != s2.subsystem_count() ||
      s1.subsystem_qubits() != s2.subsystem_qubits()) {
    throw ContractViolation("states must share subsystem count and size");
  }
  const auto observables = resolve_observables(obs, s1);
  const std::uint64_t settings =
      8 * static_cast<std::uint64_t>(s1.subsystem_count()) + ma_settings(s1) +
      ma_settings(s2) + (s1.all_init_state_mapped() ? 0 : 1) +
      (s2.all_init_state_mapped() ? 0 : 1) + 1;
  auto plan = plan_for(cfg, settings);

  std::vector<ContractedMatrix> mats;
  mats.reserve(observables.size());
  for (int m = 0; m < s1.subsystem_count(); ++m) {
    mats.push_back(build_N_impl(s1.leaf(m), s2.leaf(m),
                                observables[static_cast<std::size_t>(m)], plan));
  }
  const double a1 = normalization_impl(s1, plan);
  const double a2 = normalization_impl(s2, plan);
  const auto core = dispatch_engine(cfg.engine, s1.root(), s2.root(), mats, plan);
  const double denom = a1 * a2;
  return {core.value / denom, core.std_error / denom, plan.consumed, cfg.seed};
}

ShotEstimate overlap(const HTNState& s1, const HTNState& s2,
                     const EstimationConfig& cfg) {
  return transition_amplitude(s1, s2, {}, cfg);
}

statesim::Statevector oracle_dense(const HTNState& state, int max_qubits) {
  const int k = state.subsystem_count();
  const int n = state.subsystem_qubits();
  const int total = k * n;
  if (total > max_qubits || total > statesim::kMaxQubits) {
    throw CapacityError("oracle register of " + std::to_string(total) +
                        " qubits exceeds cap " + std::to_string(max_qubits));
  }

  const auto psi = state.root_state();
  std::vector<std::array<statesim::Statevector, 2>> leaf_states;
  leaf_states.reserve(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m) {
    leaf_states.push_back({state.leaf(m).leaf_state(0), state.leaf(m).leaf_state(1)});
  }

  const std::size_t leaf_dim = std::size_t{1} << n;
  std::vector<Complex> out(std::size_t{1} << total, Complex(0.0));
  std::vector<Complex> acc, next;
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    const Complex w = psi.amp(idx);
    if (w == 0.0) continue;
    acc.assign(1, w);
    for (int m = 0; m < k; ++m) {
      const std::size_t bit = (idx >> (k - 1 - m)) & 1u;
      const auto& phi = leaf_states[static_cast<std::size_t>(m)][bit];
      next.assign(acc.size() * leaf_dim, Complex(0.0));
      for (std::size_t a = 0; a < acc.size(); ++a) {
        if (acc[a] == 0.0) continue;
        for (std::size_t b = 0; b < leaf_dim; ++b) {
          next[a * leaf_dim + b] = acc[a] * phi.amp(b);
        }
      }
      acc.swap(next);
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += acc[i];
  }
  return statesim::Statevector::unnormalized(total, std::move(out));
}

statesim::Statevector apply_observables(const statesim::Statevector& state,
                                        std::span<const SubsystemObservable> obs) {
  int offset = 0;
  auto out = state;
  for (const auto& o : obs) {
    out = o.apply(out, offset);
    offset += o.qubits();
  }
  if (offset != state.qubits()) {
    throw ContractViolation("observables do not cover the register");
  }
  return out;
}

}  // namespace httn::htncore
