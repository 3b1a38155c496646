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

#include <string>
#include <vector>

#include "httn/dense_matrix.hpp"

namespace httn::numkit {

/// Single-qubit Pauli labels, indexed to match decomposition coefficients
/// h_0..h_3.
enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

/// The 2x2 Pauli matrix for a label. Y uses the convention
/// Y(0,1) = -i, Y(1,0) = +i.
const DenseMatrix& pauli_matrix(Pauli p);

char pauli_to_char(Pauli p);
Pauli pauli_from_char(char c);

std::string pauli_string_to_string(const std::vector<Pauli>& labels);
std::vector<Pauli> pauli_string_from_string(const std::string& s);

/// Common fixed single-qubit gates.
const DenseMatrix& gate_hadamard();
const DenseMatrix& gate_s();
const DenseMatrix& gate_sdg();
const DenseMatrix& gate_t();

/// Look up a single-qubit gate by name (I, X, Y, Z, H, S, Sdg, T);
/// throws ContractViolation for unknown names.
const DenseMatrix& gate_by_name(const std::string& name);

}  // namespace httn::numkit
