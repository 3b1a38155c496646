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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "httn/contraction.hpp"
#include "httn/htn_state.hpp"

namespace httn::cli {

/// Configuration file problem; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// One parsed instance file: the tree states, per-subsystem observables, and
/// estimation settings. Root and leaf matrices come from `haar` seeds,
/// literal rows of "re,im" pairs, or named single-qubit gate compositions.
struct InstanceConfig {
  int k = 0;
  int n = 0;
  std::optional<htncore::HTNState> state1;
  std::optional<htncore::HTNState> state2;
  std::vector<htncore::SubsystemObservable> observables;  // empty = identity
  bool observable_specified = false;
  htncore::EstimationConfig estimation;
  bool engine_specified = false;
};

/// Parse and validate a config file. `need_state2` makes the second state
/// mandatory (transition amplitude, overlap).
InstanceConfig load_instance_config(const std::string& path, bool need_state2);

}  // namespace httn::cli
