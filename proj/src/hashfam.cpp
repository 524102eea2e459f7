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

#include "qepad/hashfam.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace qepad {

namespace {

// Fixed irreducible moduli per even degree. Each is re-verified on
// construction; the table only picks which irreducible polynomial names
// the field.
std::uint32_t builtin_modulus(int m) {
    if (m < 1 || m > kMaxFieldDegree)
        raise(ErrorCode::domain_too_large,
              "field degree must be in [1, " + std::to_string(kMaxFieldDegree) + "]");
    switch (m) {
    case 2: return 0x7;     // x^2 + x + 1
    case 4: return 0x13;    // x^4 + x + 1
    case 6: return 0x43;    // x^6 + x + 1
    case 8: return 0x11b;   // x^8 + x^4 + x^3 + x + 1
    case 10: return 0x409;  // x^10 + x^3 + 1
    case 12: return 0x1053; // x^12 + x^6 + x^4 + x + 1
    default:
        raise(ErrorCode::bad_parameters,
              "no built-in modulus for degree " + std::to_string(m));
    }
}

int poly_degree(std::uint32_t p) {
    int d = -1;
    for (int b = 0; b < 32; ++b)
        if (p >> b & 1u)
            d = b;
    return d;
}

// Remainder of a mod b over GF(2)[x].
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

} // namespace

bool FieldGF2m::is_irreducible(std::uint32_t poly, int m) {
    if (poly_degree(poly) != m || m < 1)
        return false;
    // Trial division by every polynomial of degree 1 .. m/2 (monic by the
    // leading bit). Exhaustive and exact for the small degrees used here.
    for (int d = 1; 2 * d <= m; ++d) {
        const std::uint32_t lo = 1u << d;
        const std::uint32_t hi = 1u << (d + 1);
        for (std::uint32_t q = lo; q < hi; ++q)
            if (poly_mod(poly, q) == 0)
                return false;
    }
    return true;
}

FieldGF2m::FieldGF2m(int m) : FieldGF2m(m, builtin_modulus(m)) {}

FieldGF2m::FieldGF2m(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
    if (m < 1 || m > kMaxFieldDegree)
        raise(ErrorCode::domain_too_large,
              "field degree must be in [1, " + std::to_string(kMaxFieldDegree) + "]");
    if (poly_degree(modulus) != m)
        raise(ErrorCode::bad_parameters, "modulus degree does not match the field");
    if (!is_irreducible(modulus, m))
        raise(ErrorCode::bad_parameters, "modulus is reducible over GF(2)");
}

std::uint32_t FieldGF2m::mul(std::uint32_t x, std::uint32_t y) const {
    const std::uint32_t top = 1u << m_;
    if (x >= top || y >= top)
        raise(ErrorCode::bad_parameters, "field element out of range");
    std::uint32_t r = 0;
    while (y) {
        if (y & 1u)
            r ^= x;
        y >>= 1;
        x <<= 1;
        if (x & top)
            x ^= modulus_;
    }
    return r;
}

std::uint32_t PermutationFamily::apply(std::uint64_t index, std::uint32_t x) const {
    if (index == 0)
        raise(ErrorCode::zero_index, "family index 0 is not a permutation");
    if (index > index_count())
        raise(ErrorCode::bad_index, "family index out of range");
    return field_.mul(static_cast<std::uint32_t>(index), x);
}

void PermutationFamily::verify_bijective() const {
    const std::uint64_t n = field_.order();
    std::vector<bool> seen(n);
    for (std::uint64_t i = 1; i < n; ++i) {
        seen.assign(n, false);
        for (std::uint64_t x = 0; x < n; ++x) {
            const std::uint32_t y = field_.mul(static_cast<std::uint32_t>(i),
                                               static_cast<std::uint32_t>(x));
            if (seen[y])
                raise(ErrorCode::internal,
                      "family index " + std::to_string(i) + " is not a bijection");
            seen[y] = true;
        }
    }
}

KeySpec::KeySpec(int key_bits, int width) : t_k(key_bits), m(width) {
    if (width < 1 || key_bits < 0 || key_bits > width)
        raise(ErrorCode::bad_parameters, "key length must satisfy 0 <= t_k <= m");
}

std::uint32_t KeySpec::embed(std::uint64_t key) const {
    if (key >= key_count())
        raise(ErrorCode::bad_key, "key exceeds t_k bits");
    return static_cast<std::uint32_t>(key);
}

XorUniversalReport verify_xor_universal(const PermutationFamily& fam,
                                        const KeySpec& keys) {
    const int m = fam.width();
    if (m > kMaxFieldDegree)
        raise(ErrorCode::domain_too_large, "exhaustive verification requires m <= 12");
    if (keys.m != m)
        raise(ErrorCode::bad_parameters, "key spec width does not match the family");

    const std::uint64_t n_keys = keys.key_count();
    const std::uint64_t order = fam.field().order();
    const std::uint64_t n_idx = fam.index_count();

    // Pair counts of the key difference k xor k'. The embedded key set is
    // the low-bits subspace, so differences stay inside it, but the count
    // is taken by direct enumeration rather than assumed.
    std::vector<std::uint64_t> diff_count(order, 0);
    for (std::uint64_t k = 0; k < n_keys; ++k)
        for (std::uint64_t kp = 0; kp < n_keys; ++kp)
            ++diff_count[keys.embed(k) ^ keys.embed(kp)];

    // Offset counts: h_i(k) xor h_i(k') = i * (k xor k').
    std::vector<std::uint64_t> offset_count(order, 0);
    for (std::uint64_t delta = 0; delta < order; ++delta) {
        if (diff_count[delta] == 0)
            continue;
        if (delta == 0) {
            offset_count[0] += diff_count[0] * n_idx;
            continue;
        }
        for (std::uint64_t i = 1; i < order; ++i)
            offset_count[fam.field().mul(static_cast<std::uint32_t>(i),
                                         static_cast<std::uint32_t>(delta))] +=
                diff_count[delta];
    }

    XorUniversalReport rep;
    rep.total = n_idx * n_keys * n_keys;
    for (std::uint64_t a = 1; a < order; ++a)
        rep.max_count = std::max(rep.max_count, offset_count[a]);
    rep.max_prob = static_cast<double>(rep.max_count) / static_cast<double>(rep.total);
    rep.bound = 1.0 / static_cast<double>(order);
    rep.literal_den = order - 1;
    rep.literal_exceeds_bound = true; // 1/(2^m - 1) > 2^-m always
    // Exact comparison max_count / total <= 1 / 2^m by cross multiplication.
    rep.pass = rep.max_count * order <= rep.total;
    return rep;
}

} // namespace qepad
