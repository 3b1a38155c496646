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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "httn/contraction.hpp"
#include "instance_config.hpp"
#include "report.hpp"
#include "support/test_util.hpp"

using namespace httn;

namespace {

std::string fixture(const std::string& name) {
  return std::string(HTTN_FIXTURE_DIR) + "/" + name;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HTTN_CLI_PATH) + " " + args + " 2>&1";
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) result.output += buf.data();
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

numkit::Complex load_expected(const std::string& name) {
  std::ifstream in(fixture(name));
  REQUIRE(in.good());
  double re = 0.0, im = 0.0;
  in >> re >> im;
  return {re, im};
}

}  // namespace

TEST_CASE("instance config: fixture files parse and validate") {
  const auto cfg = cli::load_instance_config(fixture("amplitude_k2n2.yaml"), true);
  CHECK(cfg.k == 2);
  CHECK(cfg.n == 2);
  CHECK(cfg.state1.has_value());
  CHECK(cfg.state2.has_value());
  CHECK(cfg.observables.size() == 2);
  CHECK(cfg.estimation.mode == htncore::Mode::Exact);
  CHECK(cfg.estimation.seed == 7);
  CHECK(cfg.engine_specified);
  CHECK(cfg.state1->leaf(1).init_state_mapped());
}

TEST_CASE("instance config: diagnostics name the offending field") {
  try {
    cli::load_instance_config(fixture("malformed.yaml"), true);
    FAIL("expected a ConfigError");
  } catch (const cli::ConfigError& e) {
    const std::string what = e.what();
    CHECK(what.find("state1.leaves[0].indexed.u1") != std::string::npos);
    CHECK(what.find("not unitary") != std::string::npos);
    CHECK(what.find("max deviation") != std::string::npos);
  }
  CHECK_THROWS_AS(cli::load_instance_config(fixture("missing.yaml"), true),
                  cli::ConfigError);
  // state2 is optional only for expectation-style use.
  CHECK_THROWS_AS(
      cli::load_instance_config(fixture("expectation_k2n2.yaml"), true),
      cli::ConfigError);
  CHECK_NOTHROW(
      cli::load_instance_config(fixture("expectation_k2n2.yaml"), false));
}

TEST_CASE("instance config: gate compositions and literals build unitaries") {
  const auto cfg = cli::load_instance_config(fixture("gate_root.yaml"), true);
  // Root H on one qubit.
  CHECK(cfg.state1->root().max_abs_diff(numkit::gate_hadamard()) < 1e-12);
  const auto exact = htncore::overlap(*cfg.state1, *cfg.state2, cfg.estimation);
  CHECK(std::abs(exact.value - 1.0) < 1e-12);
}

TEST_CASE("format_complex: 12 significant digits, explicit sign") {
  CHECK(cli::format_complex({1.0, 0.0}) == "1+0i");
  CHECK(cli::format_complex({-0.25, -2.0}) == "-0.25-2i");
  CHECK(cli::format_complex({1.0 / 3.0, 2.0 / 3.0}) ==
        "0.333333333333+0.666666666667i");
}

TEST_CASE("cli: fixture estimates match the committed oracle values") {
  SUBCASE("amplitude") {
    const auto cfg =
        cli::load_instance_config(fixture("amplitude_k2n2.yaml"), true);
    const auto est = htncore::transition_amplitude(*cfg.state1, *cfg.state2,
                                                   cfg.observables, cfg.estimation);
    CHECK(std::abs(est.value - load_expected("amplitude_k2n2.expected")) < 1e-9);
  }
  SUBCASE("overlap") {
    const auto cfg =
        cli::load_instance_config(fixture("overlap_k2n2.yaml"), true);
    const auto est = htncore::overlap(*cfg.state1, *cfg.state2, cfg.estimation);
    CHECK(std::abs(est.value - load_expected("overlap_k2n2.expected")) < 1e-9);
  }
  SUBCASE("expectation") {
    const auto cfg =
        cli::load_instance_config(fixture("expectation_k2n2.yaml"), false);
    const auto est =
        htncore::expectation(*cfg.state1, cfg.observables, cfg.estimation);
    CHECK(std::abs(est.value - load_expected("expectation_k2n2.expected")) < 1e-9);
  }
}

TEST_CASE("cli binary: reports, oracle flag, exit codes") {
  const auto self = run_cli("overlap " + fixture("self_overlap.yaml") + " --oracle");
  CHECK(self.exit_code == 0);
  CHECK(self.output.find("S      = 1+") != std::string::npos);
  CHECK(self.output.find("seed   = 0") != std::string::npos);
  CHECK(self.output.find("oracle = ") != std::string::npos);

  const auto amp = run_cli("amplitude " + fixture("amplitude_k2n2.yaml") + " --oracle");
  CHECK(amp.exit_code == 0);
  CHECK(amp.output.find("T      = -0.153801790943-0.159728260836i") != std::string::npos);
  CHECK(amp.output.find("error  = ") != std::string::npos);

  const auto bad = run_cli("amplitude " + fixture("malformed.yaml"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("state1.leaves[0].indexed.u1") != std::string::npos);

  const auto missing = run_cli("amplitude /nonexistent.yaml");
  CHECK(missing.exit_code == 2);

  const auto capacity = run_cli("normstudy --n-min 9 --n-max 9 --samples 100");
  CHECK(capacity.exit_code == 3);

  const auto degenerate =
      run_cli("overlap " + fixture("degenerate.yaml") + " --seed 1");
  CHECK(degenerate.exit_code == 4);
  CHECK(degenerate.output.find("degenerate normalization") != std::string::npos);

  const auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("amplitude") != std::string::npos);
}

TEST_CASE("cli binary: oracle flag leaves the estimate unchanged") {
  const std::string base = "expectation " + fixture("expectation_k2n2.yaml");
  const auto plain = run_cli(base);
  const auto with_oracle = run_cli(base + " --oracle");
  REQUIRE(plain.exit_code == 0);
  REQUIRE(with_oracle.exit_code == 0);
  const auto first_line = plain.output.substr(0, plain.output.find('\n'));
  CHECK(with_oracle.output.rfind(first_line, 0) == 0);
}

TEST_CASE("cli binary: shot-mode reports are reproducible under one seed") {
  const std::string cmd = "amplitude " + fixture("amplitude_k2n2.yaml") +
                          " --mode shots --shots 20000 --seed 91";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("seed   = 91") != std::string::npos);

  const auto c = run_cli("amplitude " + fixture("amplitude_k2n2.yaml") +
                         " --mode shots --shots 20000 --seed 92");
  CHECK(c.output != a.output);
}

TEST_CASE("cli binary: normstudy CSV is byte-identical under one seed") {
  const std::string out1 = "/tmp/httn_test_ns1.csv";
  const std::string out2 = "/tmp/httn_test_ns2.csv";
  const std::string cmd = "normstudy --n-min 1 --n-max 2 --samples 150 --seed 17 --out ";
  CHECK(run_cli(cmd + out1).exit_code == 0);
  CHECK(run_cli(cmd + out2 + " --threads 2").exit_code == 0);
  std::ifstream f1(out1), f2(out2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().rfind("n,samples,", 0) == 0);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}
