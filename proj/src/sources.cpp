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

#include "qepad/sources.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qepad {

Interpretation Interpretation::make(
    DensityOperator parent,
    std::vector<std::pair<double, DensityOperator>> comps) {
    if (comps.empty())
        raise(ErrorCode::bad_parameters, "interpretation needs at least one component");
    const std::size_t d = parent.dim();
    double mass = 0.0;
    CMat acc(d);
    for (const auto& [p, sigma] : comps) {
        if (p <= 0.0)
            raise(ErrorCode::bad_parameters, "component probabilities must be positive");
        if (sigma.dim() != d)
            raise(ErrorCode::dimension_mismatch, "component dimension differs from parent");
        mass += p;
        for (std::size_t i = 0; i < d * d; ++i)
            acc.entries()[i] += p * sigma.matrix().entries()[i];
    }
    if (std::abs(mass - 1.0) > kArithmeticTol)
        raise(ErrorCode::mass_not_normalized, "component probabilities must sum to 1");
    if (acc.max_abs_diff(parent.matrix()) > kValidationTol)
        raise(ErrorCode::bad_parameters,
              "ensemble mixture does not reproduce the parent state");
    return Interpretation{std::move(parent), std::move(comps)};
}

std::vector<double> FlatDecomposition::remix(std::size_t len) const {
    std::vector<double> out(len, 0.0);
    const double cell = 1.0 / static_cast<double>(std::size_t{1} << t);
    for (const auto& [q, flat] : terms)
        for (std::uint32_t s : flat.support) {
            if (s >= len)
                raise(ErrorCode::bad_parameters, "support point outside distribution");
            out[s] += q * cell;
        }
    return out;
}

DensityOperator FlatDecomposition::term_state(std::size_t j) const {
    if (n_qubits < 0)
        raise(ErrorCode::bad_parameters,
              "decomposition has no state context (classical weights only)");
    const std::size_t d = std::size_t{1} << n_qubits;
    const auto& flat = terms.at(j).second;
    const double cell = 1.0 / static_cast<double>(std::size_t{1} << t);
    CMat m(d);
    if (basis) {
        for (std::uint32_t s : flat.support)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    m(r, c) += cell * (*basis)(r, s) * std::conj((*basis)(c, s));
    } else {
        for (std::uint32_t s : flat.support)
            m(s, s) = cell;
    }
    return DensityOperator::unchecked(n_qubits, std::move(m));
}

DensityOperator FlatDecomposition::reconstruct_state() const {
    if (n_qubits < 0)
        raise(ErrorCode::bad_parameters, "decomposition has no state context");
    const std::size_t d = std::size_t{1} << n_qubits;
    CMat acc(d);
    for (std::size_t j = 0; j < terms.size(); ++j) {
        const DensityOperator term = term_state(j);
        for (std::size_t i = 0; i < d * d; ++i)
            acc.entries()[i] += terms[j].first * term.matrix().entries()[i];
    }
    return DensityOperator::unchecked(n_qubits, std::move(acc));
}

FlatDecomposition decompose_flat(std::span<const double> weights, int t) {
    if (t < 0 || t > 30)
        raise(ErrorCode::bad_parameters, "entropy parameter out of range");
    const std::size_t cells = std::size_t{1} << t;
    const std::size_t n = weights.size();
    if (n < cells)
        raise(ErrorCode::bad_parameters,
              "need at least 2^t weights for a 2^t-point flat source");

    double sum = 0.0;
    double peak = 0.0;
    for (double w : weights) {
        if (w < -kArithmeticTol)
            raise(ErrorCode::bad_parameters, "negative weight");
        sum += w;
        peak = std::max(peak, w);
    }
    if (std::abs(sum - 1.0) > kArithmeticTol)
        raise(ErrorCode::mass_not_normalized, "weights must sum to 1");
    const double ceiling = 1.0 / static_cast<double>(cells);
    if (peak > ceiling + kArithmeticTol)
        raise(ErrorCode::entropy_too_low,
              "max weight " + std::to_string(peak) + " exceeds 2^-t");

    std::vector<double> residual(weights.begin(), weights.end());
    for (auto& r : residual)
        r = std::max(r, 0.0);
    std::vector<std::size_t> order(n);

    FlatDecomposition dec;
    dec.t = t;
    double remaining = sum;
    const std::size_t step_cap = n * cells + 8;
    for (std::size_t step = 0; remaining > kArithmeticTol && step < step_cap; ++step) {
        remaining = std::accumulate(residual.begin(), residual.end(), 0.0);
        if (remaining <= kArithmeticTol)
            break;
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return residual[a] > residual[b];
        });
        const double r_last = residual[order[cells - 1]];
        const double r_next = cells < n ? residual[order[cells]] : 0.0;

        // Peel until the smallest in-set coordinate hits zero or the next
        // coordinate saturates the post-peel ceiling (remaining - w)/2^t.
        const double w = std::min(remaining - static_cast<double>(cells) * r_next,
                                  static_cast<double>(cells) * r_last);
        if (w <= 0.0)
            break;

        FlatSource flat;
        flat.t = t;
        flat.support.assign(order.begin(), order.begin() + cells);
        std::sort(flat.support.begin(), flat.support.end());
        const double slice = w / static_cast<double>(cells);
        for (std::uint32_t s : flat.support)
            residual[s] = std::max(residual[s] - slice, 0.0);
        dec.terms.emplace_back(w, std::move(flat));
        remaining -= w;
    }
    remaining = std::accumulate(residual.begin(), residual.end(), 0.0);
    if (remaining > kArithmeticTol)
        raise(ErrorCode::internal, "flat peel left unassigned mass");
    return dec;
}

namespace {

// Support vectors of decompose_flat index the weight list, which for a
// state is the descending-eigenvalue order; remap them to eigenvector
// column indices (here the identity, kept explicit for clarity).
FlatDecomposition attach_state_context(FlatDecomposition dec, const Spectrum& spec,
                                       int n_qubits) {
    dec.basis = spec.eigenvectors;
    dec.n_qubits = n_qubits;
    return dec;
}

} // namespace

FlatDecomposition decompose_state(const DensityOperator& rho, int t) {
    if (t < 0 || t > rho.n_qubits())
        raise(ErrorCode::bad_parameters, "entropy parameter must be in [0, n]");
    const Spectrum spec = hermitian_eigen(rho.matrix());
    std::vector<double> lambda = spec.eigenvalues;
    for (auto& l : lambda)
        l = std::max(l, 0.0);
    const double ceiling = 1.0 / static_cast<double>(std::size_t{1} << t);
    if (lambda.front() > ceiling + kArithmeticTol)
        raise(ErrorCode::entropy_too_low, "state min-entropy is below t");
    return attach_state_context(decompose_flat(lambda, t), spec, rho.n_qubits());
}

Lemma2Report check_product_bound(const Interpretation& interp, int t) {
    Lemma2Report rep;
    rep.bound = std::pow(2.0, -t);
    for (const auto& [p, sigma] : interp.components) {
        const Spectrum spec = hermitian_eigen(sigma.matrix());
        rep.worst = std::max(rep.worst, p * spec.eigenvalues.front());
    }
    rep.pass = rep.worst <= rep.bound + kArithmeticTol;
    return rep;
}

std::string_view source_kind_name(SourceKind kind) {
    switch (kind) {
    case SourceKind::flat_random_support: return "flat-random-support";
    case SourceKind::random_diagonal: return "random-diagonal";
    case SourceKind::random_unitary_conjugated: return "random-unitary-conjugated";
    case SourceKind::adversarial_near_threshold: return "adversarial-near-threshold";
    }
    return "unknown";
}

std::optional<SourceKind> parse_source_kind(std::string_view name) {
    for (SourceKind kind : kAllSourceKinds)
        if (name == source_kind_name(kind))
            return kind;
    // Short aliases for config files.
    if (name == "flat") return SourceKind::flat_random_support;
    if (name == "diagonal") return SourceKind::random_diagonal;
    if (name == "unitary") return SourceKind::random_unitary_conjugated;
    if (name == "threshold") return SourceKind::adversarial_near_threshold;
    return std::nullopt;
}

namespace {

// Random weights blended toward uniform just enough to respect the 2^-t cap.
std::vector<double> capped_random_weights(std::size_t dim, int t, Rng& rng) {
    const double cap = 1.0 / static_cast<double>(std::size_t{1} << t);
    const double flat = 1.0 / static_cast<double>(dim);
    std::vector<double> w = random_distribution(dim, rng);
    const double peak = *std::max_element(w.begin(), w.end());
    if (peak > cap) {
        const double alpha = (cap - flat) / (peak - flat);
        for (auto& x : w)
            x = alpha * x + (1.0 - alpha) * flat;
    }
    return w;
}

DensityOperator diagonal_in_basis(int n_qubits, const std::vector<double>& w,
                                  const CMat& basis) {
    const std::size_t d = w.size();
    CMat m(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                m(r, c) += w[j] * basis(r, j) * std::conj(basis(c, j));
    return DensityOperator::unchecked(n_qubits, std::move(m));
}

} // namespace

DensityOperator random_t_source(int n_qubits, int t, SourceKind kind,
                                std::uint64_t seed) {
    if (n_qubits < 1 || n_qubits > 6 || t < 0 || t > n_qubits)
        raise(ErrorCode::bad_parameters, "need 1 <= n <= 6 and 0 <= t <= n");
    if (t == n_qubits)
        return maximally_mixed(n_qubits); // the unique state of maximal min-entropy

    const std::size_t d = std::size_t{1} << n_qubits;
    const std::size_t cells = std::size_t{1} << t;
    Rng rng(seed);

    switch (kind) {
    case SourceKind::flat_random_support: {
        std::vector<std::uint32_t> idx(d);
        std::iota(idx.begin(), idx.end(), 0);
        for (std::size_t i = d - 1; i > 0; --i)
            std::swap(idx[i], idx[rng.below(i + 1)]);
        std::vector<double> w(d, 0.0);
        for (std::size_t j = 0; j < cells; ++j)
            w[idx[j]] = 1.0 / static_cast<double>(cells);
        return DensityOperator::from_diagonal(n_qubits, w);
    }
    case SourceKind::random_diagonal:
        return DensityOperator::from_diagonal(n_qubits,
                                              capped_random_weights(d, t, rng));
    case SourceKind::random_unitary_conjugated: {
        const std::vector<double> w = capped_random_weights(d, t, rng);
        const CMat u = random_unitary(d, rng);
        return diagonal_in_basis(n_qubits, w, u);
    }
    case SourceKind::adversarial_near_threshold: {
        // One eigenvalue sits exactly on the 2^-t ceiling; the rest of the
        // mass is a capped random distribution over the remaining axes.
        const double cap = 1.0 / static_cast<double>(cells);
        std::vector<double> w(d, 0.0);
        w[0] = cap;
        if (d > 1) {
            std::vector<double> rest = random_distribution(d - 1, rng);
            const double mass = 1.0 - cap;
            double peak = *std::max_element(rest.begin(), rest.end()) * mass;
            const double flat = mass / static_cast<double>(d - 1);
            if (peak > cap && peak > flat) {
                const double alpha = (cap - flat) / (peak - flat);
                for (auto& x : rest)
                    x = alpha * x * mass + (1.0 - alpha) * flat;
            } else {
                for (auto& x : rest)
                    x *= mass;
            }
            for (std::size_t j = 1; j < d; ++j)
                w[j] = rest[j - 1];
        }
        // Random permutation hides the pinned coordinate.
        for (std::size_t i = d - 1; i > 0; --i)
            std::swap(w[i], w[rng.below(i + 1)]);
        return DensityOperator::from_diagonal(n_qubits, w);
    }
    }
    raise(ErrorCode::bad_parameters, "unknown source kind");
}

Interpretation random_interpretation(const DensityOperator& rho,
                                     std::size_t n_components, Rng& rng) {
    const std::size_t d = rho.dim();
    const Spectrum spec = hermitian_eigen(rho.matrix());

    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < d; ++j)
        if (spec.eigenvalues[j] > 1e-14)
            kept.push_back(j);
    const std::size_t rank = kept.size();
    const std::size_t m = std::max(n_components, rank);

    // |psi_i> = sum_j U_ij sqrt(lambda_j) |v_j>, U with orthonormal
    // columns; the ensemble of normalized |psi_i> with p_i = <psi_i|psi_i>
    // mixes back to rho for any such U.
    const CMat u = random_unitary(m, rng);
    std::vector<std::pair<double, DensityOperator>> comps;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<cplx> psi(d, 0.0);
        for (std::size_t jj = 0; jj < rank; ++jj) {
            const std::size_t j = kept[jj];
            const cplx coeff = u(i, jj) * std::sqrt(spec.eigenvalues[j]);
            for (std::size_t r = 0; r < d; ++r)
                psi[r] += coeff * spec.eigenvectors(r, j);
        }
        double p = 0.0;
        for (const auto& amp : psi)
            p += std::norm(amp);
        if (p < 1e-14)
            continue;
        comps.emplace_back(p, pure_state(rho.n_qubits(), psi));
    }
    // Absorb normalization slack from dropped near-zero components.
    double mass = 0.0;
    for (const auto& [p, s] : comps)
        mass += p;
    for (auto& [p, s] : comps)
        p /= mass;
    return Interpretation::make(rho, std::move(comps));
}

} // namespace qepad
