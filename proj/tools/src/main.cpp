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

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "httn/contraction.hpp"
#include "httn/errors.hpp"
#include "httn/experiments.hpp"
#include "instance_config.hpp"
#include "report.hpp"

namespace {

using namespace httn;

struct GlobalFlags {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;
  std::optional<std::string> engine;
  std::optional<std::string> mode;
  std::optional<std::string> split;
  bool oracle = false;
  std::string out = "-";
  bool fast = false;
  int threads = 0;
};

htncore::Engine engine_from_name(const std::string& name) {
  if (name == "spectral") return htncore::Engine::Spectral;
  if (name == "svd") return htncore::Engine::Svd;
  if (name == "montecarlo") return htncore::Engine::MonteCarlo;
  throw cli::ConfigError("unknown engine '" + name + "'");
}

void apply_overrides(cli::InstanceConfig& cfg, const GlobalFlags& flags) {
  if (flags.seed) cfg.estimation.seed = *flags.seed;
  if (flags.shots) cfg.estimation.shots = *flags.shots;
  if (flags.mode) {
    cfg.estimation.mode =
        *flags.mode == "exact" ? htncore::Mode::Exact : htncore::Mode::Shots;
  }
  if (flags.split) {
    cfg.estimation.split = *flags.split == "stratified"
                               ? htncore::Split::Stratified
                               : htncore::Split::Randomized;
  }
  if (flags.engine) {
    cfg.estimation.engine = engine_from_name(*flags.engine);
    cfg.engine_specified = true;
  }
}

// Dense-oracle reference for a configured instance; `obs` may be empty.
numkit::Complex oracle_reference(const htncore::HTNState& s1,
                                 const htncore::HTNState& s2,
                                 std::span<const htncore::SubsystemObservable> obs) {
  const auto psi1 = htncore::oracle_dense(s1);
  auto psi2 = htncore::oracle_dense(s2);
  if (!obs.empty()) psi2 = htncore::apply_observables(psi2, obs);
  const auto raw = numkit::inner_product(psi1.amps(), psi2.amps());
  return raw / (psi1.norm() * psi2.norm());
}

void print_oracle_lines(std::ostream& os, numkit::Complex estimate,
                        numkit::Complex reference) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", std::abs(estimate - reference));
  os << "oracle = " << cli::format_complex(reference) << "\n"
     << "error  = " << buf << "\n";
}

enum class AmplitudeKind { Transition, Overlap };

int run_amplitude(const std::string& config_path, const GlobalFlags& flags,
                  AmplitudeKind kind) {
  auto cfg = cli::load_instance_config(config_path, /*need_state2=*/true);
  apply_overrides(cfg, flags);

  const auto& s1 = *cfg.state1;
  const auto& s2 = *cfg.state2;
  const bool is_overlap = kind == AmplitudeKind::Overlap;
  const std::vector<htncore::SubsystemObservable> no_obs;
  const auto& obs = is_overlap ? no_obs : cfg.observables;

  const auto est = htncore::transition_amplitude(s1, s2, obs, cfg.estimation);
  const double a1 = htncore::normalization(s1, cfg.estimation);
  const double a2 = htncore::normalization(s2, cfg.estimation);

  char a_buf[64];
  std::cout << (is_overlap ? "S" : "T") << "      = "
            << cli::format_complex(est.value) << "\n";
  std::snprintf(a_buf, sizeof a_buf, "%.12g", a1);
  std::cout << "A1     = " << a_buf << "\n";
  std::snprintf(a_buf, sizeof a_buf, "%.12g", a2);
  std::cout << "A2     = " << a_buf << "\n";
  cli::print_estimate_tail(std::cout, est, cfg.estimation);
  if (flags.oracle) {
    print_oracle_lines(std::cout, est.value, oracle_reference(s1, s2, obs));
  }
  return 0;
}

int run_expectation(const std::string& config_path, const GlobalFlags& flags) {
  auto cfg = cli::load_instance_config(config_path, /*need_state2=*/false);
  apply_overrides(cfg, flags);
  if (!cfg.engine_specified) {
    cfg.estimation.engine = htncore::Engine::Spectral;
  }

  const auto& state = *cfg.state1;
  const auto est = htncore::expectation(state, cfg.observables, cfg.estimation);
  const double a = htncore::normalization(state, cfg.estimation);

  char a_buf[64];
  std::cout << "O      = " << cli::format_complex(est.value) << "\n";
  std::snprintf(a_buf, sizeof a_buf, "%.12g", a);
  std::cout << "A      = " << a_buf << "\n";
  cli::print_estimate_tail(std::cout, est, cfg.estimation);
  if (flags.oracle) {
    print_oracle_lines(std::cout, est.value,
                       oracle_reference(state, state, cfg.observables));
  }
  return 0;
}

// CSV goes to --out ("-" = stdout); progress lines go to the other stream.
struct CsvTarget {
  std::ofstream file;
  std::ostream* csv = nullptr;
  std::ostream* log = nullptr;
};

CsvTarget open_csv(const std::string& out) {
  CsvTarget t;
  if (out == "-") {
    t.csv = &std::cout;
    t.log = &std::cerr;
    return t;
  }
  t.file.open(out, std::ios::binary | std::ios::trunc);
  if (!t.file) throw cli::ConfigError("cannot open output file '" + out + "'");
  t.csv = &t.file;
  t.log = &std::cout;
  return t;
}

int run_normstudy(const GlobalFlags& flags, int n_min, int n_max,
                  std::uint64_t samples, bool samples_given) {
  if (flags.fast) {
    n_max = std::min(n_max, 5);
    if (!samples_given) samples = 1000;
  }
  if (n_min < 1 || n_max < n_min) {
    throw cli::ConfigError("invalid n range");
  }
  std::vector<int> n_range;
  for (int n = n_min; n <= n_max; ++n) n_range.push_back(n);
  const std::uint64_t seed = flags.seed.value_or(0);

  const auto results =
      experiments::norm_study(n_range, samples, seed, flags.threads);
  auto target = open_csv(flags.out);
  experiments::write_norm_study_csv(*target.csv, results);
  target.csv->flush();
  *target.log << "normstudy: n in [" << n_min << ", " << n_max << "], "
              << samples << " samples per n\n"
              << "seed   = " << seed << "\n";
  return 0;
}

int run_costscan(const GlobalFlags& flags, int k_min, int k_max, int n,
                 std::vector<std::uint64_t> shots_grid, std::uint64_t repeats,
                 bool repeats_given, bool grid_given) {
  if (flags.fast) {
    if (!repeats_given) repeats = 30;
    if (!grid_given) shots_grid = {1000, 10000};
  }
  if (k_min < 1 || k_max < k_min) {
    throw cli::ConfigError("invalid k range");
  }
  std::vector<int> k_range;
  for (int k = k_min; k <= k_max; ++k) k_range.push_back(k);
  const std::uint64_t seed = flags.seed.value_or(0);

  const auto result = experiments::cost_scan(k_range, n, shots_grid, repeats,
                                             seed, flags.threads);
  auto target = open_csv(flags.out);
  experiments::write_cost_scan_csv(*target.csv, result);
  target.csv->flush();
  *target.log << "costscan: k in [" << k_min << ", " << k_max << "], n = " << n
              << ", " << repeats << " repeats\n"
              << "seed   = " << seed << "\n";
  for (const auto& fit : result.shot_slopes) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", fit.slope);
    *target.log << "slope(k=" << fit.k << ", "
                << experiments::engine_name(fit.engine) << ") = " << buf << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid tree-tensor-network amplitude and expectation estimator"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "Root seed for all pseudo-random streams");
  app.add_option("--shots", flags.shots, "Total shot budget (shot mode)");
  app.add_option("--engine", flags.engine, "Contraction engine")
      ->check(CLI::IsMember({"spectral", "svd", "montecarlo"}));
  app.add_option("--mode", flags.mode, "Estimation mode")
      ->check(CLI::IsMember({"exact", "shots"}));
  app.add_option("--split", flags.split, "Re/Im shot allocation")
      ->check(CLI::IsMember({"stratified", "randomized"}));
  app.add_flag("--oracle", flags.oracle,
               "Also run the brute-force oracle and report the error");
  app.add_option("--out", flags.out, "CSV output path ('-' = stdout)");
  app.add_flag("--fast", flags.fast, "Reduced-size study profile");
  app.add_option("--threads", flags.threads,
                 "Worker threads for studies (0 = auto)");

  std::string config_path;
  auto* amplitude = app.add_subcommand(
      "amplitude", "Transition amplitude between two configured states");
  amplitude->add_option("config", config_path, "Instance config file")->required();
  amplitude->fallthrough();

  auto* overlap_cmd =
      app.add_subcommand("overlap", "Overlap between two configured states");
  overlap_cmd->add_option("config", config_path, "Instance config file")->required();
  overlap_cmd->fallthrough();

  auto* expectation_cmd = app.add_subcommand(
      "expectation", "Expectation value of the configured observable");
  expectation_cmd->add_option("config", config_path, "Instance config file")
      ->required();
  expectation_cmd->fallthrough();

  int n_min = 1, n_max = 7;
  std::uint64_t samples = 10000;
  auto* normstudy = app.add_subcommand(
      "normstudy", "Random-instance statistics of gamma and the operator norm");
  auto* samples_opt =
      normstudy->add_option("--samples", samples, "Samples per n");
  normstudy->add_option("--n-min", n_min, "Smallest subsystem size");
  normstudy->add_option("--n-max", n_max, "Largest subsystem size");
  normstudy->fallthrough();

  int k_min = 1, k_max = 3, scan_n = 2;
  std::uint64_t repeats = 100;
  std::vector<std::uint64_t> shots_grid{1000, 10000, 100000};
  auto* costscan = app.add_subcommand(
      "costscan", "RMSE-vs-shots comparison of the contraction engines");
  costscan->add_option("--k-min", k_min, "Smallest subsystem count");
  costscan->add_option("--k-max", k_max, "Largest subsystem count");
  costscan->add_option("--n", scan_n, "Subsystem qubit count");
  auto* grid_opt = costscan->add_option("--shots-grid", shots_grid,
                                        "Comma-separated shot budgets")
                       ->delimiter(',');
  auto* repeats_opt = costscan->add_option("--repeats", repeats, "Runs per cell");
  costscan->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (amplitude->parsed()) {
      return run_amplitude(config_path, flags, AmplitudeKind::Transition);
    }
    if (overlap_cmd->parsed()) {
      return run_amplitude(config_path, flags, AmplitudeKind::Overlap);
    }
    if (expectation_cmd->parsed()) {
      return run_expectation(config_path, flags);
    }
    if (normstudy->parsed()) {
      return run_normstudy(flags, n_min, n_max, samples, samples_opt->count() > 0);
    }
    if (costscan->parsed()) {
      return run_costscan(flags, k_min, k_max, scan_n, shots_grid, repeats,
                          repeats_opt->count() > 0, grid_opt->count() > 0);
    }
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateNormalization& e) {
    std::cerr << "degenerate normalization: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
