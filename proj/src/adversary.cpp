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

#include "qepad/adversary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qepad/rng.hpp"

namespace qepad {

namespace {

// Smallest eigenvalue check for PSD validation.
void require_psd(const CMat& m, const char* what) {
    const Spectrum spec = hermitian_eigen(m);
    if (spec.eigenvalues.back() < -kValidationTol)
        raise(ErrorCode::bad_parameters,
              std::string(what) + " must be positive semidefinite");
}

inline int parity32(std::uint32_t bits) { return std::popcount(bits) & 1; }

} // namespace

BinaryPOVM BinaryPOVM::from_element0(CMat a0) {
    require_psd(a0, "POVM element");
    const std::size_t d = a0.size();
    CMat a1 = CMat::identity(d);
    a1 -= a0;
    return BinaryPOVM{std::move(a0), std::move(a1)};
}

FunctionTable::FunctionTable(std::vector<std::uint32_t> values, int bits)
    : outputs(std::move(values)), width(bits) {
    if (width < 1 || width > 8)
        raise(ErrorCode::bad_parameters, "function output width must be in [1, 8]");
    if (outputs.empty())
        raise(ErrorCode::bad_parameters, "function table must be total");
    const std::uint32_t limit = (1u << width) - 1u;
    for (std::uint32_t v : outputs)
        if (v > limit)
            raise(ErrorCode::bad_parameters, "function value exceeds output width");
}

bool FunctionTable::is_constant() const {
    return std::all_of(outputs.begin(), outputs.end(),
                       [&](std::uint32_t v) { return v == outputs.front(); });
}

Adversary Adversary::from_binary(const BinaryPOVM& povm, std::uint32_t label0,
                                 std::uint32_t label1, int bits) {
    Adversary adv;
    adv.elements = {povm.element0, povm.element1};
    adv.labels = {label0, label1};
    adv.width = bits;
    return adv;
}

Adversary Adversary::basis_labeled(int n_qubits, const FunctionTable& f) {
    const std::size_t d = std::size_t{1} << n_qubits;
    if (f.outputs.size() != d)
        raise(ErrorCode::label_mismatch,
              "basis adversary needs one function value per basis state");
    Adversary adv;
    adv.width = f.width;
    for (std::size_t x = 0; x < d; ++x) {
        CMat proj(d);
        proj(x, x) = 1.0;
        adv.elements.push_back(std::move(proj));
        adv.labels.push_back(f(x));
    }
    return adv;
}

BinaryPOVM helstrom_povm(const DensityOperator& rho0, const DensityOperator& rho1) {
    if (rho0.dim() != rho1.dim())
        raise(ErrorCode::dimension_mismatch, "state dimensions differ");
    CMat diff = rho0.matrix();
    diff -= rho1.matrix();
    const Spectrum spec = hermitian_eigen(diff);
    const std::size_t d = diff.size();
    CMat a0(d);
    for (std::size_t j = 0; j < d; ++j) {
        if (spec.eigenvalues[j] < 0.0)
            continue;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                a0(r, c) += spec.eigenvectors(r, j) * std::conj(spec.eigenvectors(c, j));
    }
    return BinaryPOVM::from_element0(std::move(a0));
}

double exact_win_probability(const BinaryPOVM& povm, const DensityOperator& rho0,
                             const DensityOperator& rho1) {
    if (povm.element0.size() != rho0.dim() || rho0.dim() != rho1.dim())
        raise(ErrorCode::dimension_mismatch, "POVM and state dimensions differ");
    const double p0 = trace_product(povm.element0, rho0.matrix()).real();
    const double p1 = trace_product(povm.element1, rho1.matrix()).real();
    return 0.5 * (p0 + p1);
}

double simulate_guessing_game(const BinaryPOVM& povm, const DensityOperator& rho0,
                              const DensityOperator& rho1, std::uint64_t trials,
                              std::uint64_t seed) {
    if (trials < 1)
        raise(ErrorCode::bad_parameters, "need at least one trial");
    // Born probabilities of outcome 0 on each hypothesis, computed once.
    const double q0 =
        std::clamp(trace_product(povm.element0, rho0.matrix()).real(), 0.0, 1.0);
    const double q1 =
        std::clamp(trace_product(povm.element0, rho1.matrix()).real(), 0.0, 1.0);
    Rng rng(seed);
    std::uint64_t wins = 0;
    for (std::uint64_t tr = 0; tr < trials; ++tr) {
        const int b = rng.below(2) == 0 ? 0 : 1;
        const double p_outcome0 = b == 0 ? q0 : q1;
        const int outcome = rng.uniform() < p_outcome0 ? 0 : 1;
        wins += outcome == b ? 1 : 0;
    }
    return static_cast<double>(wins) / static_cast<double>(trials);
}

namespace {

// Pr[adv outputs value matching target] on the given payload state.
double prediction_probability(const Adversary& adv, const CMat& payload,
                              std::uint32_t target) {
    double acc = 0.0;
    for (std::size_t e = 0; e < adv.elements.size(); ++e)
        if (adv.labels[e] == target)
            acc += trace_product(adv.elements[e], payload).real();
    return acc;
}

void require_labels_cover(const Adversary& adv, const FunctionTable& f) {
    for (std::uint32_t v : f.outputs)
        if (std::find(adv.labels.begin(), adv.labels.end(), v) == adv.labels.end())
            raise(ErrorCode::label_mismatch,
                  "adversary labels do not cover the function range");
}

// Index-averaged ciphertext of each component and of the parent, computed
// once so repeated games (the r-search in particular) reuse them.
struct GameViews {
    std::vector<CMat> component_views;
    CMat parent_view;
};

GameViews compute_views(const Interpretation& interp, const CipherParams& params) {
    GameViews views;
    views.parent_view = index_average(avg_channel(interp.parent, params)).matrix();
    views.component_views.reserve(interp.components.size());
    for (const auto& [p, sigma] : interp.components)
        views.component_views.push_back(
            index_average(avg_channel(sigma, params)).matrix());
    return views;
}

GameResult gap_from_views(const Adversary& adv, const FunctionTable& f,
                          const Interpretation& interp, const GameViews& views) {
    GameResult res;
    for (std::size_t i = 0; i < interp.components.size(); ++i) {
        const double p = interp.components[i].first;
        res.p_real += p * prediction_probability(adv, views.component_views[i], f(i));
        res.p_ideal += p * prediction_probability(adv, views.parent_view, f(i));
    }
    res.gap = std::abs(res.p_real - res.p_ideal);
    return res;
}

} // namespace

GameResult strong_security_gap(const Adversary& adv, const FunctionTable& f,
                               const Interpretation& interp,
                               const CipherParams& params) {
    if (f.outputs.size() != interp.components.size())
        raise(ErrorCode::label_mismatch,
              "function table size differs from the interpretation");
    require_labels_cover(adv, f);
    return gap_from_views(adv, f, interp, compute_views(interp, params));
}

double max_f(const FunctionTable& f, const Interpretation& interp) {
    if (f.outputs.size() != interp.components.size())
        raise(ErrorCode::label_mismatch,
              "function table size differs from the interpretation");
    std::vector<double> mass(std::size_t{1} << f.width, 0.0);
    for (std::size_t i = 0; i < interp.components.size(); ++i)
        mass[f(i)] += interp.components[i].first;
    return *std::max_element(mass.begin(), mass.end());
}

GlWitness goldreich_levin_reduce(const Adversary& adv, const FunctionTable& f,
                                 const Interpretation& interp,
                                 const CipherParams& params, double epsilon) {
    if (f.outputs.size() != interp.components.size())
        raise(ErrorCode::label_mismatch,
              "function table size differs from the interpretation");
    const GameViews views = compute_views(interp, params);

    const std::uint32_t r_limit = 1u << f.width;
    GlWitness best{0, FunctionTable({0}, 1), -1.0};
    for (std::uint32_t r = 1; r < r_limit; ++r) {
        std::vector<std::uint32_t> hr(f.outputs.size());
        for (std::size_t i = 0; i < hr.size(); ++i)
            hr[i] = parity32(r & f(i));
        FunctionTable predicate(hr, 1);

        Adversary reduced;
        reduced.width = 1;
        reduced.elements = adv.elements;
        reduced.labels.reserve(adv.labels.size());
        for (std::uint32_t label : adv.labels)
            reduced.labels.push_back(parity32(r & label));

        const GameResult game = gap_from_views(reduced, predicate, interp, views);
        if (game.gap > best.gap)
            best = GlWitness{r, std::move(predicate), game.gap};
    }
    if (best.gap < epsilon / 2.0 - 1e-9)
        raise(ErrorCode::no_witness,
              "no output mask achieves half the function gap (hypothesis violated?)");
    return best;
}

PredicateSplitWitness predicate_split_witness(const Interpretation& interp,
                                              const FunctionTable& h, int t) {
    if (h.width != 1)
        raise(ErrorCode::bad_parameters, "witness construction needs a predicate");
    if (h.outputs.size() != interp.components.size())
        raise(ErrorCode::label_mismatch,
              "predicate table size differs from the interpretation");
    const std::size_t d = interp.parent.dim();
    const int n = interp.parent.n_qubits();

    double r0 = 0.0, r1 = 0.0;
    CMat acc0(d), acc1(d);
    for (std::size_t i = 0; i < interp.components.size(); ++i) {
        const auto& [p, sigma] = interp.components[i];
        CMat& acc = h(i) == 0 ? acc0 : acc1;
        (h(i) == 0 ? r0 : r1) += p;
        for (std::size_t e = 0; e < d * d; ++e)
            acc.entries()[e] += p * sigma.matrix().entries()[e];
    }
    if (r0 <= 0.0 || r1 <= 0.0)
        raise(ErrorCode::constant_predicate,
              "predicate is constant on the interpretation support");

    acc0 *= 1.0 / r0;
    acc1 *= 1.0 / r1;
    DensityOperator tau0 = DensityOperator::unchecked(n, std::move(acc0));
    DensityOperator tau1 = DensityOperator::unchecked(n, std::move(acc1));

    const DensityOperator mixed = maximally_mixed(n);
    const std::pair<double, DensityOperator> blend0[] = {{r0, tau0}, {r1, mixed}};
    const std::pair<double, DensityOperator> blend1[] = {{r0, interp.parent}, {r1, mixed}};

    PredicateSplitWitness w{std::move(tau0), std::move(tau1), r0, r1,
                            mix(blend0),     mix(blend1),     0.0, 0.0,
                            false};
    w.tau0_prime_entropy = min_entropy(w.tau0_prime);
    w.rho_prime_entropy = min_entropy(w.rho_prime);
    w.entropy_ok = w.tau0_prime_entropy >= static_cast<double>(t - 1) - 1e-9 &&
                   w.rho_prime_entropy >= static_cast<double>(t) - 1e-9;
    return w;
}

} // namespace qepad
