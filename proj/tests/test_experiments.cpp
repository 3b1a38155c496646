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
#include <sstream>
#include <vector>

#include "httn/errors.hpp"
#include "httn/experiments.hpp"
#include "support/test_util.hpp"

using namespace httn;
using htncore::Engine;

TEST_CASE("draw_norm_sample: gamma dominates the operator norm on every draw") {
  for (int n = 1; n <= 3; ++n) {
    for (int s = 0; s < 400; ++s) {
      auto rng = numkit::substream(71, static_cast<std::uint64_t>(n * 1000 + s));
      const auto sample = experiments::draw_norm_sample(n, rng);
      CHECK(sample.gamma >= sample.opnorm - 1e-9);
      CHECK(sample.opnorm >= 0.0);
    }
  }
}

TEST_CASE("norm_study: preconditions") {
  const std::vector<int> ns{2};
  CHECK_THROWS_AS(experiments::norm_study(ns, 99, 1), ContractViolation);
  const std::vector<int> too_big{9};
  CHECK_THROWS_AS(experiments::norm_study(too_big, 100, 1), CapacityError);
}

TEST_CASE("norm_study: statistics land in the expected bands (small run)") {
  const std::vector<int> ns{1, 2, 3};
  const auto results = experiments::norm_study(ns, 400, 72);
  REQUIRE(results.size() == 3);
  for (const auto& r : results) {
    CHECK(r.samples == 400);
    CHECK(r.mean_ratio >= 1.0);
    CHECK(r.mean_ratio > 1.1);
    CHECK(r.mean_ratio < 1.7);
    CHECK(r.sd_ratio > 0.0);
    CHECK(r.mean_opnorm > 0.0);
    CHECK(r.mean_gamma >= r.mean_opnorm);
  }
  // Norms shrink as n grows.
  CHECK(results[2].mean_opnorm < results[0].mean_opnorm);
}

TEST_CASE("norm_study: schedule-independent determinism") {
  const std::vector<int> ns{2};
  const auto serial = experiments::norm_study(ns, 120, 73, 1);
  const auto threaded = experiments::norm_study(ns, 120, 73, 4);
  REQUIRE(serial.size() == threaded.size());
  CHECK(serial[0].mean_ratio == threaded[0].mean_ratio);
  CHECK(serial[0].sd_ratio == threaded[0].sd_ratio);
  CHECK(serial[0].mean_gamma == threaded[0].mean_gamma);
  CHECK(serial[0].mean_opnorm == threaded[0].mean_opnorm);

  std::ostringstream a, b;
  experiments::write_norm_study_csv(a, serial);
  experiments::write_norm_study_csv(b, threaded);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("n,samples,mean_ratio,sd_ratio,mean_gamma,sd_gamma,"
                      "mean_opnorm,sd_opnorm\n", 0) == 0);
}

TEST_CASE("cost_scan: slopes, monotone error decay, determinism") {
  const std::vector<int> ks{1, 2};
  const std::vector<std::uint64_t> shots{1000, 10000};
  const auto result = experiments::cost_scan(ks, 2, shots, 24, 74);

  REQUIRE(result.cells.size() == ks.size() * shots.size() * 2);
  REQUIRE(result.exact_values.size() == 2);
  for (const auto& cell : result.cells) {
    CHECK(cell.rmse >= 0.0);
  }

  // RMSE decreases with shots; a 10x budget step leaves no room for noise
  // inversions.
  for (int k : ks) {
    for (const auto engine : {Engine::Svd, Engine::MonteCarlo}) {
      const auto* low = result.cell(k, engine, 1000);
      const auto* high = result.cell(k, engine, 10000);
      REQUIRE(low != nullptr);
      REQUIRE(high != nullptr);
      CHECK(high->rmse < low->rmse);
    }
  }

  // Slopes land near -1/2 even at this small repeat count.
  REQUIRE(result.shot_slopes.size() == 4);
  for (const auto& fit : result.shot_slopes) {
    CHECK(fit.slope < -0.2);
    CHECK(fit.slope > -0.8);
  }

  const auto again = experiments::cost_scan(ks, 2, shots, 24, 74, 2);
  std::ostringstream a, b;
  experiments::write_cost_scan_csv(a, result);
  experiments::write_cost_scan_csv(b, again);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("k,engine,shots,rmse,stderr\n", 0) == 0);
}

TEST_CASE("cost_scan: capacity and argument validation") {
  const std::vector<int> ks{1};
  const std::vector<std::uint64_t> shots{100};
  CHECK_THROWS_AS(experiments::cost_scan(ks, 9, shots, 10, 1), CapacityError);
  const std::vector<int> big_k{9};
  CHECK_THROWS_AS(experiments::cost_scan(big_k, 2, shots, 10, 1), CapacityError);
  CHECK_THROWS_AS(experiments::cost_scan(ks, 2, shots, 1, 1), ContractViolation);
}

TEST_CASE("csv formatting carries 10 significant digits") {
  experiments::NormStudyResult r;
  r.n = 3;
  r.samples = 10;
  r.mean_ratio = 1.0 / 3.0;
  std::ostringstream os;
  const std::vector<experiments::NormStudyResult> rows{r};
  experiments::write_norm_study_csv(os, rows);
  CHECK(os.str().find("0.3333333333") != std::string::npos);
}
