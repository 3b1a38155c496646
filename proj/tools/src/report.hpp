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

#include <iosfwd>
#include <string>

#include "httn/contraction.hpp"

namespace httn::cli {

/// "a+bi" with 12 significant digits per component.
std::string format_complex(numkit::Complex z);

/// The common tail of every estimate report: stderr, shots, seed, engine,
/// mode, split.
void print_estimate_tail(std::ostream& os, const htncore::ShotEstimate& est,
                         const htncore::EstimationConfig& cfg);

const char* mode_name(htncore::Mode mode);
const char* split_name(htncore::Split split);

}  // namespace httn::cli
