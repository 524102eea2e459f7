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
 * Min-entropy sources and their machinery: interpretations (ensembles
 * compatible with a parent state), greedy flat-source decomposition of
 * high-min-entropy distributions, the product bound p_i * lambda_max_i
 * <= 2^-t for ensemble components, and seeded generators of t-sources.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qepad/qmatrix.hpp"
#include "qepad/rng.hpp"

namespace qepad {

/// Ensemble {(p_i, sigma_i)} whose mixture equals the parent state; the
/// adversary's a priori view of the message space.
struct Interpretation {
    DensityOperator parent;
    std::vector<std::pair<double, DensityOperator>> components;

    /// Validates p_i > 0, sum p_i = 1 within 1e-12, and that the mixture
    /// reproduces the parent entrywise within 1e-10.
    static Interpretation make(DensityOperator parent,
                               std::vector<std::pair<double, DensityOperator>> comps);
};

/// Uniform distribution over exactly 2^t points of some orthonormal basis.
struct FlatSource {
    int t = 0;
    std::vector<std::uint32_t> support; ///< sorted, |support| = 2^t
};

/// Convex combination of flat sources of a common entropy t. When built
/// from a state the basis columns are the parent's eigenvectors; when
/// absent the computational basis is implied.
struct FlatDecomposition {
    int t = 0;
    std::vector<std::pair<double, FlatSource>> terms;
    std::optional<CMat> basis;
    int n_qubits = -1; ///< set when the decomposition came from a state

    /// Classical remix sum_j q_j * uniform(F_j) over `len` points.
    [[nodiscard]] std::vector<double> remix(std::size_t len) const;

    /// Density operator of term j (requires basis or n_qubits).
    [[nodiscard]] DensityOperator term_state(std::size_t j) const;

    /// sum_j q_j * term_state(j).
    [[nodiscard]] DensityOperator reconstruct_state() const;
};

/**
 * Greedy peel of a probability vector with max weight <= 2^-t into flat
 * sources over 2^t points each. Every step takes the 2^t largest residual
 * coordinates (ties by ascending index) and peels as much mass as either
 * zeroes the smallest of them or saturates the next coordinate against
 * the entropy ceiling, so at most N * 2^t terms are produced.
 *
 * Errors: EntropyTooLow if the max weight exceeds 2^-t + 1e-12,
 * MassNotNormalized if the weights do not sum to one within 1e-12,
 * BadParameters if fewer than 2^t weights are given.
 */
FlatDecomposition decompose_flat(std::span<const double> weights, int t);

/// Flat decomposition of a state with min-entropy at least t, carried out
/// on its spectrum in its own eigenbasis.
FlatDecomposition decompose_state(const DensityOperator& rho, int t);

struct Lemma2Report {
    double worst = 0.0; ///< max_i p_i * lambda_max(sigma_i)
    double bound = 0.0; ///< 2^-t
    bool pass = false;
};

/// Checks p_i * lambda_max(sigma_i) <= 2^-t + 1e-12 for every component.
Lemma2Report check_product_bound(const Interpretation& interp, int t);

/// Generator strategies for random t-sources.
enum class SourceKind {
    flat_random_support,       ///< uniform over a random 2^t-point support
    random_diagonal,           ///< random diagonal weights capped at 2^-t
    random_unitary_conjugated, ///< capped diagonal conjugated by a random unitary
    adversarial_near_threshold ///< largest eigenvalue pinned at exactly 2^-t
};

std::string_view source_kind_name(SourceKind kind);
std::optional<SourceKind> parse_source_kind(std::string_view name);
inline constexpr SourceKind kAllSourceKinds[] = {
    SourceKind::flat_random_support, SourceKind::random_diagonal,
    SourceKind::random_unitary_conjugated, SourceKind::adversarial_near_threshold};

/// Seeded state with min-entropy at least t (within 1e-9 bits). For t = n
/// the only such state is I/2^n and that is what every kind returns.
DensityOperator random_t_source(int n_qubits, int t, SourceKind kind,
                                std::uint64_t seed);

/// Random pure-state ensemble for `rho` via the unitary freedom in its
/// eigendecomposition; components carry p_i > 0 and mix back to rho.
Interpretation random_interpretation(const DensityOperator& rho,
                                     std::size_t n_components, Rng& rng);

} // namespace qepad
