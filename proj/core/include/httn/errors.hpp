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

#include <stdexcept>
#include <string>

namespace httn {

/// Requested register or enumeration size exceeds a configured cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated an operation precondition (non-unitary input, role
/// mismatch, index out of range, ...).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A shot-mode normalization estimate came out non-positive, so the
/// normalized quantity cannot be formed.
class DegenerateNormalization : public std::runtime_error {
 public:
  explicit DegenerateNormalization(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace httn
