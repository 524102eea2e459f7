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
 * n-qubit Pauli masks X^a Z^b and their conjugation action on density
 * operators. Conjugation is an index permutation plus sign flips, O(4^n)
 * per call; the dense matrix form exists only as a test oracle. Global
 * phases cancel in conjugation, so none are tracked.
 */

#pragma once

#include <cstdint>

#include "qepad/qmatrix.hpp"

namespace qepad {

/// Bit strings a (X part) and b (Z part) selecting X^a Z^b on n qubits.
struct PauliMask {
    int n_qubits = 0;
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    PauliMask(int n, std::uint32_t x_part, std::uint32_t z_part);

    /// Identity mask on n qubits.
    static PauliMask zero(int n) { return PauliMask(n, 0, 0); }
};

/// rho -> (X^a Z^b) rho (X^a Z^b)^dagger, i.e.
/// out[x,y] = (-1)^{b.(x xor y)} rho[x xor a, y xor a].
DensityOperator conjugate(const DensityOperator& rho, const PauliMask& m);

/// Conjugation by the adjoint mask Z^b X^a. Undoes conjugate() exactly:
/// the index shuffles and sign flips cancel bit for bit.
DensityOperator inverse_conjugate(const DensityOperator& rho, const PauliMask& m);

/// Sign picked up when commuting Z^{z_part} past X^{x_part}:
/// (-1)^{parity(x_part AND z_part)}. LengthMismatch if the bit-string
/// lengths differ.
int commutation_sign(std::uint32_t x_part, int x_len, std::uint32_t z_part,
                     int z_len);

/// dst += weight * conjugate(rho, m), without temporaries. Accumulation
/// kernel for channel averaging.
void accumulate_conjugate(CMat& dst, const DensityOperator& rho,
                          const PauliMask& m, double weight);

} // namespace qepad
