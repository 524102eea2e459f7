// Copyright 2026 The qepad developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

#include "qepad/qmatrix.hpp"

namespace qepad {

/// Stateless 64-bit mix used to derive per-task seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Seeded generator: mt19937_64 under the hood. Streams are reproducible
/// for a fixed binary; the algorithm name is recorded in emitted CSV
/// headers so other implementations can state their own.
class Rng {
  public:
    static constexpr const char* kAlgorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
    }

    double normal() {
        return std::normal_distribution<double>(0.0, 1.0)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

/// Haar-like random unitary: Gram-Schmidt of a complex Gaussian matrix
/// with the phase of each diagonal R entry absorbed into its column.
CMat random_unitary(std::size_t dim, Rng& rng);

/// Random probability vector (iid uniforms, normalized).
std::vector<double> random_distribution(std::size_t len, Rng& rng);

/// Random Hermitian matrix with entries of order one.
CMat random_hermitian(std::size_t dim, Rng& rng);

/// Random full-rank density operator (Gaussian mixture of pure states).
DensityOperator random_density(int n_qubits, Rng& rng);

} // namespace qepad
