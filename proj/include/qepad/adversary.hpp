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
 * Security games against the averaged cipher channel: Helstrom
 * distinguishers, exact prediction-gap measurement for arbitrary
 * function tables, the Goldreich-Levin reduction from functions to
 * predicates, and the entropy-preserving witness states built from a
 * predicate split of an interpretation.
 *
 * Adversaries are finite-outcome POVMs on the payload space with an
 * output label per element, applied uniformly across the public index
 * blocks; every game probability is computed exactly via traces.
 * Sampling exists only in simulate_guessing_game.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "qepad/cipher.hpp"
#include "qepad/qmatrix.hpp"
#include "qepad/sources.hpp"

namespace qepad {

/// Two-outcome POVM {A0, A1 = I - A0}.
struct BinaryPOVM {
    CMat element0;
    CMat element1;

    /// Builds {a0, I - a0}; a0 must be PSD within 1e-10.
    static BinaryPOVM from_element0(CMat a0);
};

/// Function on interpretation components: outputs[i] is the bit string
/// (width <= 8 bits) assigned to component i.
struct FunctionTable {
    std::vector<std::uint32_t> outputs;
    int width = 1;

    FunctionTable(std::vector<std::uint32_t> values, int bits);

    [[nodiscard]] std::uint32_t operator()(std::size_t i) const {
        return outputs.at(i);
    }
    [[nodiscard]] bool is_constant() const;
};

/// POVM with an output label per element; labels share the width of the
/// function table the adversary is playing against.
struct Adversary {
    std::vector<CMat> elements; ///< PSD, summing to the identity
    std::vector<std::uint32_t> labels;
    int width = 1;

    static Adversary from_binary(const BinaryPOVM& povm, std::uint32_t label0 = 0,
                                 std::uint32_t label1 = 1, int bits = 1);
    /// Computational-basis measurement labeled by `f` (one outcome per
    /// basis state of an n-qubit payload).
    static Adversary basis_labeled(int n_qubits, const FunctionTable& f);
};

/// The two prediction probabilities of the strong game and their gap.
struct GameResult {
    double p_real = 0.0;  ///< Pr_i[A(E(sigma_i)) = f(sigma_i)]
    double p_ideal = 0.0; ///< Pr_i[A(E(rho)) = f(sigma_i)]
    double gap = 0.0;     ///< |p_real - p_ideal|
};

/// Optimal binary discriminator of rho0 vs rho1 at equal priors: element0
/// projects onto the nonnegative eigenspace of (rho0 - rho1), achieving
/// win probability 1/2 + 1/2 * trace_distance(rho0, rho1).
BinaryPOVM helstrom_povm(const DensityOperator& rho0, const DensityOperator& rho1);

/// 1/2 Tr(A0 rho0) + 1/2 Tr(A1 rho1): the exact equal-prior win
/// probability of the given POVM.
double exact_win_probability(const BinaryPOVM& povm, const DensityOperator& rho0,
                             const DensityOperator& rho1);

/// Samples the equal-prior guessing game (b uniform, outcome Born-
/// distributed) and returns the empirical win rate.
double simulate_guessing_game(const BinaryPOVM& povm, const DensityOperator& rho0,
                              const DensityOperator& rho1, std::uint64_t trials,
                              std::uint64_t seed);

/// Exact gap between predicting f(sigma_i) from E(sigma_i) and from the
/// component-independent E(rho). LabelMismatch if the adversary's labels
/// cannot express some value of f.
GameResult strong_security_gap(const Adversary& adv, const FunctionTable& f,
                               const Interpretation& interp,
                               const CipherParams& params);

/// max_z Pr_i[f(sigma_i) = z]: the best blind prediction probability.
double max_f(const FunctionTable& f, const Interpretation& interp);

/// Outcome of the function-to-predicate reduction.
struct GlWitness {
    std::uint32_t r = 0;     ///< nonzero output-bit mask
    FunctionTable predicate; ///< h_r(i) = parity(r AND f(i))
    double gap = 0.0;        ///< exact gap of the induced predicate adversary
};

/**
 * Goldreich-Levin reduction: given an adversary whose function gap is at
 * least epsilon, exhaustively searches the nonzero output masks r and
 * returns one whose induced predicate adversary (labels reduced to
 * parity(r AND label)) has gap at least epsilon/2 - 1e-9. NoWitness if
 * none does, which signals a violated hypothesis.
 */
GlWitness goldreich_levin_reduce(const Adversary& adv, const FunctionTable& f,
                                 const Interpretation& interp,
                                 const CipherParams& params, double epsilon);

/// Witness states of the predicate split: the two conditional mixtures,
/// their weights, and the maximally-mixed blends that keep min-entropy
/// t - 1 and t respectively.
struct PredicateSplitWitness {
    DensityOperator tau0;
    DensityOperator tau1;
    double r0 = 0.0;
    double r1 = 0.0;
    DensityOperator tau0_prime; ///< r0 tau0 + r1 I/d
    DensityOperator rho_prime;  ///< r0 rho + r1 I/d
    double tau0_prime_entropy = 0.0;
    double rho_prime_entropy = 0.0;
    bool entropy_ok = false; ///< H(tau0') >= t-1 and H(rho') >= t, within 1e-9
};

/// Splits an interpretation by a binary predicate h and builds the blend
/// witnesses. ConstantPredicate if h does not split the support.
PredicateSplitWitness predicate_split_witness(const Interpretation& interp,
                                              const FunctionTable& h, int t);

} // namespace qepad
