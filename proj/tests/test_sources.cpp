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

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qepad/sources.hpp"

using namespace qepad;

namespace {

double reconstruction_residual(const FlatDecomposition& dec,
                               std::span<const double> weights) {
    const std::vector<double> remixed = dec.remix(weights.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i)
        worst = std::max(worst, std::abs(remixed[i] - weights[i]));
    return worst;
}

// Admissible random weight vector: max <= 2^-t, sums to one.
std::vector<double> admissible_weights(std::size_t len, int t, Rng& rng) {
    const double cap = 1.0 / static_cast<double>(std::size_t{1} << t);
    std::vector<double> w = random_distribution(len, rng);
    const double flat = 1.0 / static_cast<double>(len);
    const double peak = *std::max_element(w.begin(), w.end());
    if (peak > cap) {
        const double alpha = (cap - flat) / (peak - flat);
        for (auto& x : w)
            x = alpha * x + (1.0 - alpha) * flat;
    }
    return w;
}

} // namespace

TEST_CASE("decompose_flat: single-term and worked examples") {
    // Uniform over exactly 2^t points collapses to one term.
    const std::vector<double> uniform4(4, 0.25);
    const FlatDecomposition one = decompose_flat(uniform4, 2);
    CHECK(one.terms.size() == 1);
    CHECK(one.terms[0].first == doctest::Approx(1.0).epsilon(1e-14));

    // Greedy peel by hand: (0.5, 0.25, 0.25, 0) at t=1 gives
    // 0.5 * flat{0,1} + 0.5 * flat{0,2}.
    const std::vector<double> w = {0.5, 0.25, 0.25, 0.0};
    const FlatDecomposition two = decompose_flat(w, 1);
    REQUIRE(two.terms.size() == 2);
    CHECK(two.terms[0].first == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(two.terms[0].second.support == std::vector<std::uint32_t>{0, 1});
    CHECK(two.terms[1].first == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(two.terms[1].second.support == std::vector<std::uint32_t>{0, 2});
    CHECK(reconstruction_residual(two, w) <= 1e-12);

    // Uniform over four points at t=1: any valid pairing is accepted;
    // verification is by reconstruction.
    const FlatDecomposition pairs = decompose_flat(uniform4, 1);
    for (const auto& [q, flat] : pairs.terms)
        CHECK(flat.support.size() == 2);
    CHECK(reconstruction_residual(pairs, uniform4) <= 1e-12);
}

TEST_CASE("decompose_flat: error paths") {
    const std::vector<double> low = {0.6, 0.4};
    CHECK_THROWS_AS(decompose_flat(low, 1), Error);
    try {
        decompose_flat(low, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::entropy_too_low);
    }

    const std::vector<double> not_normalized = {0.5, 0.4};
    try {
        decompose_flat(not_normalized, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::mass_not_normalized);
    }

    const std::vector<double> short_list = {1.0};
    CHECK_THROWS_AS(decompose_flat(short_list, 1), Error);
}

TEST_CASE("decompose_flat: t = 0 peels point masses") {
    const std::vector<double> w = {0.4, 0.35, 0.25};
    const FlatDecomposition dec = decompose_flat(w, 0);
    for (const auto& [q, flat] : dec.terms)
        CHECK(flat.support.size() == 1);
    CHECK(reconstruction_residual(dec, w) <= 1e-12);
}

TEST_CASE("decompose_flat: property over random admissible vectors") {
    Rng rng(9001);
    for (int rep = 0; rep < 200; ++rep) {
        const int t = static_cast<int>(rng.below(5));          // t <= 4
        const std::size_t len = (std::size_t{1} << t) + rng.below(64);
        const std::vector<double> w = admissible_weights(std::min<std::size_t>(len, 64), t, rng);
        const FlatDecomposition dec = decompose_flat(w, t);
        double mass = 0.0;
        for (const auto& [q, flat] : dec.terms) {
            CHECK(q > 0.0);
            CHECK(flat.support.size() == (std::size_t{1} << t));
            CHECK(std::is_sorted(flat.support.begin(), flat.support.end()));
            mass += q;
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(reconstruction_residual(dec, w) <= 1e-10);
    }
}

TEST_CASE("decompose_state: eigenbasis decomposition reconstructs the state") {
    // I/2^n at t=n: a single full-basis term.
    const FlatDecomposition full = decompose_state(maximally_mixed(2), 2);
    CHECK(full.terms.size() == 1);
    CHECK(full.terms[0].second.support.size() == 4);

    // Diagonal example matches the classical peel.
    const double w[] = {0.5, 0.25, 0.25, 0.0};
    const DensityOperator rho = DensityOperator::from_diagonal(2, w);
    const FlatDecomposition dec = decompose_state(rho, 1);
    CHECK(dec.terms.size() == 2);
    CHECK(dec.reconstruct_state().matrix().max_abs_diff(rho.matrix()) <= 1e-10);

    // Random non-diagonal state with H >= 2.
    Rng rng(9002);
    for (int rep = 0; rep < 20; ++rep) {
        const DensityOperator src =
            random_t_source(3, 2, SourceKind::random_unitary_conjugated, rng.next_u64());
        const FlatDecomposition d2 = decompose_state(src, 2);
        CHECK(d2.reconstruct_state().matrix().max_abs_diff(src.matrix()) <= 1e-10);
        // Each term is itself a t-flat state in the eigenbasis.
        for (std::size_t j = 0; j < d2.terms.size(); ++j) {
            const DensityOperator term = d2.term_state(j);
            CHECK(min_entropy(term) >= 2.0 - 1e-9);
        }
    }

    CHECK_THROWS_AS(decompose_state(basis_state(2, 1), 1), Error);
}

TEST_CASE("decompose_state: remixed terms keep min-entropy t") {
    Rng rng(9003);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityOperator src =
            random_t_source(3, 2, SourceKind::random_diagonal, rng.next_u64());
        const FlatDecomposition dec = decompose_state(src, 2);
        // Arbitrary convex remix of the terms.
        std::vector<double> mix_w = random_distribution(dec.terms.size(), rng);
        const std::size_t d = src.dim();
        CMat acc(d);
        for (std::size_t j = 0; j < dec.terms.size(); ++j) {
            const DensityOperator term = dec.term_state(j);
            for (std::size_t i = 0; i < d * d; ++i)
                acc.entries()[i] += mix_w[j] * term.matrix().entries()[i];
        }
        const DensityOperator blended = DensityOperator::unchecked(3, std::move(acc));
        CHECK(min_entropy(blended) >= 2.0 - 1e-9);
    }
}

TEST_CASE("interpretation: validation accepts mixtures and rejects violators") {
    const DensityOperator parent = maximally_mixed(1);
    std::vector<std::pair<double, DensityOperator>> comps = {
        {0.5, basis_state(1, 0)}, {0.5, basis_state(1, 1)}};
    CHECK_NOTHROW(Interpretation::make(parent, comps));

    // A deliberate product-bound violator cannot be a valid ensemble of
    // any parent with that entropy: here the mixture simply differs.
    std::vector<std::pair<double, DensityOperator>> bad = {
        {0.9, basis_state(1, 0)}, {0.1, basis_state(1, 1)}};
    CHECK_THROWS_AS(Interpretation::make(parent, bad), Error);

    std::vector<std::pair<double, DensityOperator>> negative = {
        {1.5, basis_state(1, 0)}, {-0.5, basis_state(1, 1)}};
    CHECK_THROWS_AS(Interpretation::make(parent, negative), Error);
}

TEST_CASE("product bound: equality cases and random ensembles") {
    // Trivial interpretation {(1, rho)} with H(rho) = t sits exactly at
    // the bound.
    const double w[] = {0.5, 0.25, 0.125, 0.125};
    const DensityOperator rho = DensityOperator::from_diagonal(2, w);
    const Interpretation trivial =
        Interpretation::make(rho, {{1.0, rho}});
    const Lemma2Report rep = check_product_bound(trivial, 1);
    CHECK(rep.worst == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(rep.pass);

    // Equal basis split of I/2 at t=1: worst = 0.5 <= 0.5.
    const Interpretation half = Interpretation::make(
        maximally_mixed(1), {{0.5, basis_state(1, 0)}, {0.5, basis_state(1, 1)}});
    const Lemma2Report rep2 = check_product_bound(half, 1);
    CHECK(rep2.worst == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(rep2.pass);

    // Random pure-state ensembles of random t-sources always pass.
    Rng rng(9004);
    for (int rep_i = 0; rep_i < 200; ++rep_i) {
        const int n = 1 + static_cast<int>(rng.below(3));
        const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
        const SourceKind kind = kAllSourceKinds[rng.below(4)];
        const DensityOperator parent = random_t_source(n, t, kind, rng.next_u64());
        const Interpretation interp =
            random_interpretation(parent, 2 + rng.below(4), rng);
        CHECK(check_product_bound(interp, t).pass);
    }
}

TEST_CASE("random_t_source: construction guarantees") {
    Rng seeds(9005);
    for (SourceKind kind : kAllSourceKinds) {
        for (int n = 1; n <= 3; ++n) {
            for (int t = 0; t <= n; ++t) {
                const DensityOperator rho =
                    random_t_source(n, t, kind, seeds.next_u64());
                CHECK(oracles::is_valid_density(rho.matrix()));
                CHECK(min_entropy(rho) >= static_cast<double>(t) - 1e-9);
                if (t == n)
                    CHECK(rho.matrix().max_abs_diff(maximally_mixed(n).matrix()) <=
                          1e-12);
            }
        }
    }

    // Seed-fixed flat source: support of size 4, eigenvalues 0.25.
    const DensityOperator flat =
        random_t_source(3, 2, SourceKind::flat_random_support, 12345);
    const Spectrum spec = hermitian_eigen(flat.matrix());
    for (int j = 0; j < 4; ++j)
        CHECK(spec.eigenvalues[j] == doctest::Approx(0.25).epsilon(1e-13));
    for (int j = 4; j < 8; ++j)
        CHECK(spec.eigenvalues[j] == doctest::Approx(0.0).epsilon(1e-13));

    // Determinism: same seed, same state.
    const DensityOperator again =
        random_t_source(3, 2, SourceKind::flat_random_support, 12345);
    CHECK(again.matrix().max_abs_diff(flat.matrix()) == 0.0);

    // Near-threshold generator pins the top eigenvalue exactly.
    for (int t = 0; t <= 2; ++t) {
        const DensityOperator adv =
            random_t_source(3, t, SourceKind::adversarial_near_threshold, 777 + t);
        const Spectrum s = hermitian_eigen(adv.matrix());
        CHECK(s.eigenvalues.front() ==
              doctest::Approx(std::pow(2.0, -t)).epsilon(1e-14));
    }

    CHECK_THROWS_AS(random_t_source(3, 4, SourceKind::random_diagonal, 1), Error);
}
