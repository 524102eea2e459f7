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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qepad/cipher.hpp"
#include "qepad/sources.hpp"

using namespace qepad;

TEST_CASE("encrypt: mask selection and fixed cases") {
    const CipherParams params = CipherParams::make(1, 2);

    // h_i(0) = 0: the zero key leaves the state untouched at every index.
    const DensityOperator zero = basis_state(1, 0);
    for (std::uint64_t i = 1; i <= params.index_count(); ++i) {
        const Ciphertext ct = encrypt(zero, 0, i, params);
        CHECK(ct.payload.matrix().max_abs_diff(zero.matrix()) == 0.0);
    }

    // A key/index pair whose mask is a=1, b=0 flips |0><0| to |1><1|.
    bool saw_bitflip = false;
    for (std::uint64_t i = 1; i <= params.index_count(); ++i)
        for (std::uint64_t k = 0; k < params.key_count(); ++k) {
            const PauliMask mask = params.mask_for(i, k);
            if (mask.a == 1 && mask.b == 0) {
                const Ciphertext ct = encrypt(zero, k, i, params);
                CHECK(ct.payload.matrix().max_abs_diff(basis_state(1, 1).matrix()) ==
                      0.0);
                saw_bitflip = true;
            }
        }
    CHECK(saw_bitflip);

    CHECK_THROWS_AS(encrypt(zero, 4, 1, params), Error);  // key too long
    CHECK_THROWS_AS(encrypt(zero, 0, 0, params), Error);  // index 0
    CHECK_THROWS_AS(encrypt(zero, 0, 4, params), Error);  // index out of range
}

TEST_CASE("encrypt: equals the dense unitary oracle at n = 2") {
    Rng rng(10001);
    const CipherParams params = CipherParams::make(2, 3);
    const DensityOperator rho = random_density(2, rng);
    for (int rep = 0; rep < 20; ++rep) {
        const std::uint64_t i = 1 + rng.below(params.index_count());
        const std::uint64_t k = rng.below(params.key_count());
        const Ciphertext ct = encrypt(rho, k, i, params);
        const PauliMask mask = params.mask_for(i, k);
        const CMat dense = oracles::conjugate_dense(
            rho.matrix(), oracles::dense_pauli(2, mask.a, mask.b));
        CHECK(ct.payload.matrix().max_abs_diff(dense) <= 1e-12);
    }
}

TEST_CASE("decrypt: exact round trips and wrong-key divergence") {
    Rng rng(10002);
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(3));
        const int t_k = static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(n) + 1));
        const CipherParams params = CipherParams::make(n, t_k);
        const DensityOperator rho = random_density(n, rng);
        const std::uint64_t i = 1 + rng.below(params.index_count());
        const std::uint64_t k = rng.below(params.key_count());
        const DensityOperator back = decrypt(encrypt(rho, k, i, params), k, params);
        CHECK(back.matrix().max_abs_diff(rho.matrix()) <= 1e-15);
    }

    // Zero mask decrypts to itself.
    const CipherParams params = CipherParams::make(1, 2);
    const DensityOperator zero = basis_state(1, 0);
    const DensityOperator same = decrypt(Ciphertext{1, zero}, 0, params);
    CHECK(same.matrix().max_abs_diff(zero.matrix()) == 0.0);

    // Wrong key on an instance where the masks differ in the X part.
    const Ciphertext ct = encrypt(zero, 1, 1, params); // h_1(1) = 1: mask a=0,b=1
    const PauliMask m1 = params.mask_for(1, 1);
    const PauliMask m2 = params.mask_for(1, 2);
    REQUIRE(m1.a != m2.a); // 1 vs 2: masks land on different index shuffles
    const DensityOperator wrong = decrypt(ct, 2, params);
    CHECK(wrong.matrix().max_abs_diff(zero.matrix()) > 0.5);
}

TEST_CASE("avg_channel: full keys twirl every block to I/2^n") {
    Rng rng(10003);
    for (int n = 1; n <= 2; ++n) {
        const CipherParams params = CipherParams::make(n, 2 * n);
        const DensityOperator rho = random_density(n, rng);
        const ChannelOutput out = avg_channel(rho, params);
        CHECK(out.blocks.size() == params.index_count());
        const DensityOperator mixed = maximally_mixed(n);
        for (const auto& block : out.blocks)
            CHECK(block.matrix().max_abs_diff(mixed.matrix()) <= 1e-12);
    }
}

TEST_CASE("avg_channel: single key relabels, blocks match the dense oracle") {
    Rng rng(10004);
    const CipherParams params = CipherParams::make(2, 0);
    const DensityOperator rho = random_density(2, rng);
    const ChannelOutput out = avg_channel(rho, params);
    for (std::uint64_t i = 1; i <= params.index_count(); ++i) {
        const DensityOperator expected = conjugate(rho, params.mask_for(i, 0));
        CHECK(out.block(i).matrix().max_abs_diff(expected.matrix()) == 0.0);
    }

    // Fixed flat 2-source on n=2 with t_k=2 against the brute-force blocks.
    const double w[] = {0.5, 0.0, 0.5, 0.0};
    const DensityOperator flat = DensityOperator::from_diagonal(2, w);
    const CipherParams partial = CipherParams::make(2, 2);
    const ChannelOutput fast = avg_channel(flat, partial);
    const std::vector<CMat> brute = oracles::brute_channel_blocks(flat, partial);
    for (std::size_t b = 0; b < brute.size(); ++b)
        CHECK(fast.blocks[b].matrix().max_abs_diff(brute[b]) <= 1e-13);

    CHECK_THROWS_AS(avg_channel(basis_state(1, 0), partial), Error);
}

TEST_CASE("avg_channel: fixes I/2^n and is linear") {
    Rng rng(10005);
    const CipherParams params = CipherParams::make(2, 1);
    const ChannelOutput fixed = avg_channel(maximally_mixed(2), params);
    for (const auto& block : fixed.blocks)
        CHECK(block.matrix().max_abs_diff(maximally_mixed(2).matrix()) <= 1e-12);

    const DensityOperator rho = random_density(2, rng);
    const DensityOperator sigma = random_density(2, rng);
    const double alpha = 0.3;
    const std::pair<double, DensityOperator> blend_terms[] = {{alpha, rho},
                                                              {1.0 - alpha, sigma}};
    const DensityOperator blend = mix(blend_terms);
    const ChannelOutput out_blend = avg_channel(blend, params);
    const ChannelOutput out_rho = avg_channel(rho, params);
    const ChannelOutput out_sigma = avg_channel(sigma, params);
    for (std::size_t b = 0; b < out_blend.blocks.size(); ++b) {
        CMat expect = out_rho.blocks[b].matrix();
        expect *= alpha;
        CMat other = out_sigma.blocks[b].matrix();
        other *= 1.0 - alpha;
        expect += other;
        CHECK(out_blend.blocks[b].matrix().max_abs_diff(expect) <= 1e-12);
    }
}

TEST_CASE("indist_distance: fixed values and the dense joint oracle") {
    // All blocks maximally mixed.
    const CipherParams full = CipherParams::make(1, 2);
    const ChannelOutput mixed_out = avg_channel(maximally_mixed(1), full);
    CHECK(indist_distance(mixed_out) <= 1e-12);

    // t_k = 0, pure computational input: every block is a pure state at
    // distance 1/2 from I/2.
    const CipherParams none = CipherParams::make(1, 0);
    const ChannelOutput pure_out = avg_channel(basis_state(1, 0), none);
    CHECK(indist_distance(pure_out) == doctest::Approx(0.5).epsilon(1e-12));

    // n=2 fixed instance equals the dense joint-matrix computation.
    Rng rng(10006);
    const CipherParams params = CipherParams::make(2, 1);
    const DensityOperator rho = random_density(2, rng);
    const ChannelOutput out = avg_channel(rho, params);
    const CMat joint = oracles::dense_joint(oracles::brute_channel_blocks(rho, params));
    std::vector<CMat> mixed_blocks(params.index_count(), maximally_mixed(2).matrix());
    const CMat joint_mixed = oracles::dense_joint(mixed_blocks);
    // Trace distance of the dense joint states via the eigenvalues of the
    // difference.
    CMat diff = joint;
    diff -= joint_mixed;
    const Spectrum spec = hermitian_eigen(diff);
    double dense_dist = 0.0;
    for (double l : spec.eigenvalues)
        dense_dist += std::abs(l);
    dense_dist *= 0.5;
    CHECK(indist_distance(out) == doctest::Approx(dense_dist).epsilon(1e-10));
}

TEST_CASE("joint_purity and purity_bound: fixed values, dense oracle, chain") {
    // All blocks I/2^n.
    const CipherParams full = CipherParams::make(1, 2);
    const ChannelOutput mixed_out = avg_channel(maximally_mixed(1), full);
    CHECK(joint_purity(mixed_out) ==
          doctest::Approx(1.0 / (3.0 * 2.0)).epsilon(1e-12));

    // t_k = 0 with pure input: blocks stay pure.
    const CipherParams none = CipherParams::make(1, 0);
    const ChannelOutput pure_out = avg_channel(basis_state(1, 0), none);
    CHECK(joint_purity(pure_out) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // Plug-in values of the bound.
    CHECK(purity_bound(basis_state(1, 0), none) ==
          doctest::Approx((1.0 / 3.0) * (1.0 + 0.5)).epsilon(1e-12));
    CHECK(purity_bound(maximally_mixed(1), full) ==
          doctest::Approx((1.0 / 3.0) * (0.5 / 4.0 + 0.5)).epsilon(1e-12));

    // Dense Tr(M^2) oracle on a fixed n=2 instance.
    Rng rng(10007);
    const CipherParams params = CipherParams::make(2, 2);
    const DensityOperator rho = random_density(2, rng);
    const ChannelOutput out = avg_channel(rho, params);
    const CMat joint = oracles::dense_joint(oracles::brute_channel_blocks(rho, params));
    const double dense_purity = trace_product(joint, joint).real();
    CHECK(joint_purity(out) == doctest::Approx(dense_purity).epsilon(1e-12));

    // The purity chain holds on a worst-case flat source (n=2, t=1, t_k=3).
    const double w[] = {0.5, 0.5, 0.0, 0.0};
    const DensityOperator flat = DensityOperator::from_diagonal(2, w);
    const CipherParams p3 = CipherParams::make(2, 3);
    const ChannelOutput out3 = avg_channel(flat, p3);
    CHECK(joint_purity(out3) <= purity_bound(flat, p3) + 1e-12);
}

TEST_CASE("implied_epsilon: plug-ins and dominance over the distance") {
    const CipherParams full = CipherParams::make(1, 2);
    CHECK(implied_epsilon(avg_channel(maximally_mixed(1), full)) <= 1e-6);

    // t_k = 0, n = 1, pure input: sqrt(D/|I| - 1) = 1.
    const CipherParams none = CipherParams::make(1, 0);
    CHECK(implied_epsilon(avg_channel(basis_state(1, 0), none)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    Rng rng(10008);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(2));
        const int t_k = static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(n) + 1));
        const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
        const CipherParams params = CipherParams::make(n, t_k);
        const DensityOperator rho =
            random_t_source(n, t, kAllSourceKinds[rng.below(4)], rng.next_u64());
        const ChannelOutput out = avg_channel(rho, params);
        CHECK(indist_distance(out) <= implied_epsilon(out) + 1e-12);
        CHECK(joint_purity(out) <= purity_bound(rho, params) + 1e-12);
    }
}

TEST_CASE("monotonicity: distance never grows with nested key embeddings") {
    Rng rng(10009);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 1 + static_cast<int>(rng.below(2));
        const DensityOperator rho = random_density(n, rng);
        double prev = 2.0;
        for (int t_k = 0; t_k <= 2 * n; ++t_k) {
            const ChannelOutput out = avg_channel(rho, CipherParams::make(n, t_k));
            const double dist = indist_distance(out);
            CHECK(dist <= prev + 1e-12);
            prev = dist;
        }
    }
}

TEST_CASE("weak indistinguishability via the triangle inequality") {
    Rng rng(10010);
    const CipherParams params = CipherParams::make(2, 2);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityOperator a =
            random_t_source(2, 1, SourceKind::random_unitary_conjugated, rng.next_u64());
        const DensityOperator b =
            random_t_source(2, 1, SourceKind::random_diagonal, rng.next_u64());
        const ChannelOutput out_a = avg_channel(a, params);
        const ChannelOutput out_b = avg_channel(b, params);
        CHECK(channel_distance(out_a, out_b) <=
              indist_distance(out_a) + indist_distance(out_b) + 1e-12);
    }
}

TEST_CASE("key_length_required: fixed values and clamping") {
    CHECK(key_length_required(3, 3, 1.0) == 0);
    CHECK(key_length_required(4, 2, 0.25) == 6);
    CHECK(key_length_required(3, 0, 1.0) == 3);
    CHECK(key_length_required(2, 0, 0.25) == 4); // clamped from 6 to 2n
    CHECK_THROWS_AS(key_length_required(3, 4, 0.5), Error);
    CHECK_THROWS_AS(key_length_required(3, 0, 0.0), Error);
}

TEST_CASE("index_average matches the block mean") {
    Rng rng(10011);
    const CipherParams params = CipherParams::make(1, 1);
    const DensityOperator rho = random_density(1, rng);
    const ChannelOutput out = avg_channel(rho, params);
    CMat mean(rho.dim());
    for (const auto& block : out.blocks)
        mean += block.matrix();
    mean *= 1.0 / static_cast<double>(out.blocks.size());
    CHECK(index_average(out).matrix().max_abs_diff(mean) <= 1e-15);
}
