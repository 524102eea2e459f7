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

#include "qepad/pauli.hpp"

#include <bit>

namespace qepad {

namespace {

inline int parity(std::uint32_t bits) {
    return std::popcount(bits) & 1;
}

// Per-row sign table s[z] = (-1)^{parity(b AND z)}; the conjugation sign
// factors as (-1)^{b.(x xor y)} = s[x] * s[y].
void fill_sign_table(std::vector<double>& signs, std::size_t dim,
                     std::uint32_t b) {
    signs.resize(dim);
    for (std::size_t z = 0; z < dim; ++z)
        signs[z] = parity(b & static_cast<std::uint32_t>(z)) ? -1.0 : 1.0;
}

} // namespace

PauliMask::PauliMask(int n, std::uint32_t x_part, std::uint32_t z_part)
    : n_qubits(n), a(x_part), b(z_part) {
    if (n < 1 || n > 16)
        raise(ErrorCode::bad_parameters, "mask qubit count must be in [1, 16]");
    const std::uint32_t limit = (1u << n) - 1u;
    if ((a & ~limit) != 0 || (b & ~limit) != 0)
        raise(ErrorCode::bad_parameters, "mask bits exceed the qubit count");
}

DensityOperator conjugate(const DensityOperator& rho, const PauliMask& m) {
    if (rho.n_qubits() != m.n_qubits)
        raise(ErrorCode::dimension_mismatch, "mask and state qubit counts differ");
    const std::size_t d = rho.dim();
    CMat out(d);
    accumulate_conjugate(out, rho, m, 1.0);
    return DensityOperator::unchecked(rho.n_qubits(), std::move(out));
}

DensityOperator inverse_conjugate(const DensityOperator& rho, const PauliMask& m) {
    // Z^b X^a and X^a Z^b differ by a global phase, so the adjoint-mask
    // conjugation reuses the same kernel; applying it twice is the
    // identity bit for bit.
    return conjugate(rho, m);
}

int commutation_sign(std::uint32_t x_part, int x_len, std::uint32_t z_part,
                     int z_len) {
    if (x_len != z_len)
        raise(ErrorCode::length_mismatch, "commutation_sign bit strings differ in length");
    if (x_len < 0 || x_len > 31)
        raise(ErrorCode::bad_parameters, "bit-string length out of range");
    const std::uint32_t limit = x_len == 0 ? 0u : ((1u << x_len) - 1u);
    if ((x_part & ~limit) != 0 || (z_part & ~limit) != 0)
        raise(ErrorCode::bad_parameters, "bit string exceeds stated length");
    return parity(x_part & z_part) ? -1 : 1;
}

void accumulate_conjugate(CMat& dst, const DensityOperator& rho,
                          const PauliMask& m, double weight) {
    if (dst.size() != rho.dim())
        raise(ErrorCode::dimension_mismatch, "accumulator dimension mismatch");
    const std::size_t d = rho.dim();
    const std::uint32_t a = m.a;

    static thread_local std::vector<double> signs;
    fill_sign_table(signs, d, m.b);

    const CMat& src = rho.matrix();
    for (std::size_t x = 0; x < d; ++x) {
        const std::size_t xs = x ^ a;
        const double sx = signs[x] * weight;
        for (std::size_t y = 0; y < d; ++y)
            dst(x, y) += sx * signs[y] * src(xs, y ^ a);
    }
}

} // namespace qepad
