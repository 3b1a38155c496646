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

#include <cstdint>
#include <random>
#include <vector>

#include "httn/dense_matrix.hpp"
#include "httn/pauli.hpp"

namespace httn::numkit {

/// Seeded pseudo-random stream. Owned by one task at a time; derive
/// independent substreams with `substream` instead of sharing.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  /// Standard normal.
  double normal() { return normal_(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Mix a root seed with a stream index into a new seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t index);

/// Independent stream derived from (root seed, index); the same pair always
/// yields the same stream, so parallel schedules cannot change results.
inline Rng substream(std::uint64_t root, std::uint64_t index) {
  return Rng(mix_seed(root, index));
}

/// Haar-distributed 2^q x 2^q unitary: QR of an i.i.d. complex Gaussian
/// matrix with the R-diagonal phases folded into Q.
DenseMatrix haar_random_unitary(int qubits, Rng& rng);

/// q labels drawn uniformly from {I, X, Y, Z}.
std::vector<Pauli> random_pauli_string(int qubits, Rng& rng);

}  // namespace httn::numkit
