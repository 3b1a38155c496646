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

#include "report.hpp"

#include <cstdio>
#include <ostream>

#include "httn/experiments.hpp"

namespace httn::cli {

std::string format_complex(numkit::Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

const char* mode_name(htncore::Mode mode) {
  return mode == htncore::Mode::Exact ? "exact" : "shots";
}

const char* split_name(htncore::Split split) {
  return split == htncore::Split::Stratified ? "stratified" : "randomized";
}

void print_estimate_tail(std::ostream& os, const htncore::ShotEstimate& est,
                         const htncore::EstimationConfig& cfg) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", est.std_error);
  os << "stderr = " << buf << "\n"
     << "shots  = " << est.shots << "\n"
     << "seed   = " << est.seed << "\n"
     << "engine = " << experiments::engine_name(cfg.engine) << "\n"
     << "mode   = " << mode_name(cfg.mode) << "\n"
     << "split  = " << split_name(cfg.split) << "\n";
}

}  // namespace httn::cli
