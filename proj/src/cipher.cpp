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

#include "qepad/cipher.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qepad {

CipherParams CipherParams::make(int n_qubits, int key_bits) {
    if (n_qubits < 1 || n_qubits > kMaxCipherQubits)
        raise(ErrorCode::bad_parameters, "message size must be in [1, 5] qubits");
    if (key_bits < 0 || key_bits > 2 * n_qubits)
        raise(ErrorCode::bad_parameters, "key length must be in [0, 2n] bits");
    FieldGF2m field(2 * n_qubits);
    return CipherParams{n_qubits, PermutationFamily(field),
                        KeySpec(key_bits, 2 * n_qubits)};
}

PauliMask CipherParams::mask_for(std::uint64_t index, std::uint64_t key) const {
    const std::uint32_t hashed = family.apply(index, keys.embed(key));
    const std::uint32_t low_mask = (1u << n) - 1u;
    return PauliMask(n, hashed >> n, hashed & low_mask);
}

const DensityOperator& ChannelOutput::block(std::uint64_t index) const {
    if (index == 0 || index > blocks.size())
        raise(ErrorCode::bad_index, "channel block index out of range");
    return blocks[index - 1];
}

SecurityParams::SecurityParams(int n_qubits, int source_entropy, double eps,
                               int key_bits)
    : t(source_entropy), epsilon(eps), t_k(key_bits) {
    if (t < 0 || t > n_qubits)
        raise(ErrorCode::bad_parameters, "source entropy must be in [0, n]");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        raise(ErrorCode::bad_parameters, "epsilon must be in (0, 1]");
    if (t_k < 0 || t_k > 2 * n_qubits)
        raise(ErrorCode::bad_parameters, "key length must be in [0, 2n]");
}

Ciphertext encrypt(const DensityOperator& state, std::uint64_t key,
                   std::uint64_t index, const CipherParams& params) {
    if (state.n_qubits() != params.n)
        raise(ErrorCode::dimension_mismatch, "state size differs from cipher size");
    if (index == 0 || index > params.index_count())
        raise(ErrorCode::bad_index, "index outside the family index set");
    if (key >= params.key_count())
        raise(ErrorCode::bad_key, "key outside the key space");
    return Ciphertext{index, conjugate(state, params.mask_for(index, key))};
}

DensityOperator decrypt(const Ciphertext& ct, std::uint64_t key,
                        const CipherParams& params) {
    if (ct.payload.n_qubits() != params.n)
        raise(ErrorCode::dimension_mismatch, "payload size differs from cipher size");
    if (ct.index == 0 || ct.index > params.index_count())
        raise(ErrorCode::bad_index, "index outside the family index set");
    if (key >= params.key_count())
        raise(ErrorCode::bad_key, "key outside the key space");
    return inverse_conjugate(ct.payload, params.mask_for(ct.index, key));
}

ChannelOutput avg_channel(const DensityOperator& state, const CipherParams& params) {
    if (state.n_qubits() != params.n)
        raise(ErrorCode::dimension_mismatch, "state size differs from cipher size");
    const std::uint64_t n_idx = params.index_count();
    const std::uint64_t n_keys = params.key_count();
    const std::size_t d = state.dim();
    const double weight = 1.0 / static_cast<double>(n_keys); // power of two: exact

    ChannelOutput out;
    out.n = params.n;
    out.t_k = params.keys.t_k;
    out.blocks.reserve(n_idx);
    for (std::uint64_t i = 1; i <= n_idx; ++i) {
        CMat acc(d);
        for (std::uint64_t k = 0; k < n_keys; ++k)
            accumulate_conjugate(acc, state, params.mask_for(i, k), 1.0);
        acc *= weight;
        out.blocks.push_back(DensityOperator::unchecked(params.n, std::move(acc)));
    }
    return out;
}

double indist_distance(const ChannelOutput& out) {
    const DensityOperator mixed = maximally_mixed(out.n);
    double acc = 0.0;
    for (const auto& block : out.blocks)
        acc += trace_distance(block, mixed);
    return acc / static_cast<double>(out.blocks.size());
}

double joint_purity(const ChannelOutput& out) {
    const double n_idx = static_cast<double>(out.blocks.size());
    double acc = 0.0;
    for (const auto& block : out.blocks)
        acc += purity(block);
    return acc / (n_idx * n_idx);
}

double purity_bound(const DensityOperator& state, const CipherParams& params) {
    const double n_idx = static_cast<double>(params.index_count());
    const double n_keys = static_cast<double>(params.key_count());
    const double dim = static_cast<double>(std::size_t{1} << params.n);
    return (purity(state) / n_keys + 1.0 / dim) / n_idx;
}

double implied_epsilon(const ChannelOutput& out) {
    const double joint_dim = static_cast<double>(out.blocks.size()) *
                             static_cast<double>(std::size_t{1} << out.n);
    return std::sqrt(std::max(0.0, joint_dim * joint_purity(out) - 1.0));
}

int key_length_required(int n_qubits, int t, double epsilon) {
    if (n_qubits < 1 || t < 0 || t > n_qubits)
        raise(ErrorCode::bad_parameters, "need 0 <= t <= n");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        raise(ErrorCode::bad_parameters, "epsilon must be in (0, 1]");
    const double raw =
        static_cast<double>(n_qubits - t) + 2.0 * std::log2(1.0 / epsilon);
    // Nudge below the ceiling so values that are integers up to rounding
    // noise do not get bumped a whole bit.
    const int bits = static_cast<int>(std::ceil(raw - 1e-9));
    return std::clamp(bits, 0, 2 * n_qubits);
}

double channel_distance(const ChannelOutput& a, const ChannelOutput& b) {
    if (a.blocks.size() != b.blocks.size() || a.n != b.n)
        raise(ErrorCode::dimension_mismatch, "channel outputs differ in shape");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        acc += trace_distance(a.blocks[i], b.blocks[i]);
    return acc / static_cast<double>(a.blocks.size());
}

DensityOperator index_average(const ChannelOutput& out) {
    const std::size_t d = out.blocks.front().dim();
    CMat acc(d);
    for (const auto& block : out.blocks)
        acc += block.matrix();
    acc *= 1.0 / static_cast<double>(out.blocks.size());
    return DensityOperator::unchecked(out.n, std::move(acc));
}

} // namespace qepad
