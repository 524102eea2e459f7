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

/**
 * @file
 * The keyed Pauli-mask cipher and its exact averaged channel.
 *
 * A message of n qubits is masked by X^a Z^b where the 2n-bit string a||b
 * is h_i(k) for a secret key k and a public family index i drawn from the
 * nonzero elements of GF(2^{2n}). The averaged channel keeps the public
 * index classical: one key-averaged payload block per index, never a
 * dense joint matrix. indist_distance and joint_purity are the trace
 * distance and purity of that block-diagonal joint state, computed
 * blockwise; purity_bound and implied_epsilon evaluate the purity-route
 * security estimate so the two sides of the inequality can be compared
 * on any instance.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "qepad/hashfam.hpp"
#include "qepad/pauli.hpp"
#include "qepad/qmatrix.hpp"

namespace qepad {

/// Largest message size the channel averager accepts (1023 blocks of
/// 32x32, about a million mask applications per channel).
inline constexpr int kMaxCipherQubits = 5;

/// Cipher instance: message size, mask-selection family over 2n bits and
/// the key length t_k <= 2n.
struct CipherParams {
    int n;
    PermutationFamily family;
    KeySpec keys;

    static CipherParams make(int n_qubits, int key_bits);

    [[nodiscard]] std::uint64_t index_count() const { return family.index_count(); }
    [[nodiscard]] std::uint64_t key_count() const { return keys.key_count(); }

    /// Mask selected by (index, key): a||b = h_i(embed(k)) with a the high
    /// n bits and b the low n bits.
    [[nodiscard]] PauliMask mask_for(std::uint64_t index, std::uint64_t key) const;
};

/// Public family index plus the masked payload.
struct Ciphertext {
    std::uint64_t index;
    DensityOperator payload;
};

/// Exact key-averaged channel output: block i holds
/// |K|^-1 sum_k conjugate(rho, mask(h_i(k))), keys summed in ascending
/// order so every block is bit-reproducible.
struct ChannelOutput {
    int n = 0;
    int t_k = 0;
    std::vector<DensityOperator> blocks; ///< blocks[i - 1] for index i

    [[nodiscard]] std::uint64_t index_count() const { return blocks.size(); }
    [[nodiscard]] const DensityOperator& block(std::uint64_t index) const;
};

/// Target parameters of an indistinguishability claim.
struct SecurityParams {
    int t = 0;
    double epsilon = 1.0;
    int t_k = 0;

    SecurityParams(int n_qubits, int source_entropy, double eps, int key_bits);
};

Ciphertext encrypt(const DensityOperator& state, std::uint64_t key,
                   std::uint64_t index, const CipherParams& params);

/// Exact inverse of encrypt under the same key: masks cancel bit for bit.
DensityOperator decrypt(const Ciphertext& ct, std::uint64_t key,
                        const CipherParams& params);

/// Averages the cipher over every (index, key) pair.
ChannelOutput avg_channel(const DensityOperator& state, const CipherParams& params);

/// |I|^-1 sum_i trace_distance(rho_i, I/2^n): the trace distance of the
/// joint (index (x) payload) state from maximally mixed.
double indist_distance(const ChannelOutput& out);

/// |I|^-2 sum_i purity(rho_i): the purity of the joint state.
double joint_purity(const ChannelOutput& out);

/// (1/|I|) (purity(state)/|K| + 2^-n); upper-bounds joint_purity of the
/// averaged channel on `state`.
double purity_bound(const DensityOperator& state, const CipherParams& params);

/// sqrt(max(0, D * joint_purity - 1)) with D = |I| * 2^n; dominates
/// indist_distance via the purity-to-distance estimate.
double implied_epsilon(const ChannelOutput& out);

/// Smallest key length guaranteeing epsilon-indistinguishability for
/// t-sources: ceil(n - t + 2 log2(1/epsilon)), clamped to [0, 2n].
int key_length_required(int n_qubits, int t, double epsilon);

/// Blockwise distance |I|^-1 sum_i trace_distance(a_i, b_i) between two
/// channel outputs of the same shape.
double channel_distance(const ChannelOutput& a, const ChannelOutput& b);

/// |I|^-1 sum_i rho_i: the payload seen by an adversary who ignores the
/// public index.
DensityOperator index_average(const ChannelOutput& out);

} // namespace qepad
