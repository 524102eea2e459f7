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
 * Strongly-XOR-universal permutation families over m-bit strings, realized
 * as multiplication by a nonzero element of GF(2^m), plus an exhaustive
 * exact verifier for the key-averaged offset bound.
 *
 * The verifier reports two numbers: the key-averaged offset probability
 * max_{a != 0} Pr[h_i(k) xor h_i(k') = a], which is what the cipher bound
 * consumes and must stay at or below 2^-m, and the literal fixed-pair
 * worst case 1/(2^m - 1), which exceeds 2^-m by the factor 2^m/(2^m - 1)
 * for this family.
 */

#pragma once

#include <cstdint>

#include "qepad/error.hpp"

namespace qepad {

/// Widest field degree the exhaustive verifier accepts.
inline constexpr int kMaxFieldDegree = 12;

/**
 * GF(2^m) with a fixed irreducible modulus per degree. The modulus is
 * re-verified irreducible on construction by exhaustive trial division
 * rather than trusted.
 */
class FieldGF2m {
  public:
    /// Field with the built-in modulus for degree m (even m in [2, 12]).
    explicit FieldGF2m(int m);
    /// Field with a caller-supplied modulus (bit m set, degree exactly m).
    FieldGF2m(int m, std::uint32_t modulus);

    [[nodiscard]] int degree() const { return m_; }
    [[nodiscard]] std::uint32_t modulus() const { return modulus_; }
    /// 2^m.
    [[nodiscard]] std::uint64_t order() const { return std::uint64_t{1} << m_; }

    /// Carry-less polynomial product of x and y reduced by the modulus.
    [[nodiscard]] std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;

    static bool is_irreducible(std::uint32_t poly, int m);

  private:
    int m_;
    std::uint32_t modulus_;
};

/// Free-function spelling of field multiplication.
inline std::uint32_t gf_mul(const FieldGF2m& f, std::uint32_t x, std::uint32_t y) {
    return f.mul(x, y);
}

/**
 * The family { h_i : x -> i * x } indexed by the nonzero elements of
 * GF(2^m). Each h_i is a bijection on m-bit strings; for fixed x != y the
 * offset h_i(x) xor h_i(y) = i * (x xor y) sweeps the nonzero elements
 * exactly once as i ranges over the index set.
 */
class PermutationFamily {
  public:
    explicit PermutationFamily(FieldGF2m field) : field_(field) {}

    [[nodiscard]] int width() const { return field_.degree(); }
    [[nodiscard]] const FieldGF2m& field() const { return field_; }
    /// |I| = 2^m - 1.
    [[nodiscard]] std::uint64_t index_count() const { return field_.order() - 1; }

    /// h_i(x) = i * x. ZeroIndex if index is 0; BadIndex if out of range.
    [[nodiscard]] std::uint32_t apply(std::uint64_t index, std::uint32_t x) const;

    /// Exhaustively checks every h_i is a bijection (m <= 12 only).
    void verify_bijective() const;

  private:
    FieldGF2m field_;
};

/// Key length and its zero-pad embedding into the family domain.
struct KeySpec {
    int t_k = 0; ///< key length in bits
    int m = 0;   ///< domain width; t_k <= m

    KeySpec(int key_bits, int width);

    [[nodiscard]] std::uint64_t key_count() const { return std::uint64_t{1} << t_k; }

    /// Injects a t_k-bit key into the low bits of the m-bit domain.
    [[nodiscard]] std::uint32_t embed(std::uint64_t key) const;
};

/// Exact (integer-arithmetic) verification result.
struct XorUniversalReport {
    std::uint64_t max_count = 0; ///< numerator of the worst offset probability
    std::uint64_t total = 0;     ///< denominator |I| * 2^{2 t_k}
    double max_prob = 0.0;       ///< max_count / total, for display
    double bound = 0.0;          ///< 2^-m
    std::uint64_t literal_den = 0; ///< fixed-pair worst case is 1/literal_den
    bool literal_exceeds_bound = false;
    bool pass = false; ///< exact comparison max_count * 2^m <= total
};

/**
 * Enumerates the distribution of h_i(k) xor h_i(k') exactly, with i
 * uniform over the index set and k, k' independent uniform over the
 * embedded key set, and compares the worst nonzero offset probability
 * against 2^-m in integer arithmetic. DomainTooLarge above m = 12.
 */
XorUniversalReport verify_xor_universal(const PermutationFamily& fam,
                                        const KeySpec& keys);

} // namespace qepad
