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
 * Dense complex Hermitian matrix core: construction and validation of
 * density operators, a cyclic Jacobi eigensolver, trace distance, purity
 * and min-entropy. Everything here is value-semantic and sized for
 * desk-scale work (dimension at most 64).
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qepad/error.hpp"

namespace qepad {

using cplx = std::complex<double>;

/// Absolute tolerance for type-invariant validation (Hermiticity on input,
/// spectral reconstruction, orthonormality).
inline constexpr double kValidationTol = 1e-10;
/// Absolute tolerance for arithmetic identities (trace one, mixtures).
inline constexpr double kArithmeticTol = 1e-12;
/// Off-diagonal Frobenius norm at which the Jacobi iteration stops.
inline constexpr double kJacobiOffTol = 1e-13;
/// Hard cap on Jacobi sweeps before NoConvergence is reported.
inline constexpr int kJacobiMaxSweeps = 100;

/**
 * Square complex matrix in row-major storage.
 *
 * Deliberately minimal: just enough arithmetic for density-operator work
 * and for building dense test oracles. All sums run in ascending flat
 * index order so results are bit-reproducible.
 */
class CMat {
  public:
    CMat() = default;
    explicit CMat(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static CMat identity(std::size_t dim);

    [[nodiscard]] std::size_t size() const { return dim_; }

    cplx& operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const cplx& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    [[nodiscard]] std::span<const cplx> entries() const { return entries_; }
    [[nodiscard]] std::span<cplx> entries() { return entries_; }

    CMat& operator+=(const CMat& other);
    CMat& operator-=(const CMat& other);
    CMat& operator*=(double scale);

    friend CMat operator+(CMat lhs, const CMat& rhs) { return lhs += rhs; }
    friend CMat operator-(CMat lhs, const CMat& rhs) { return lhs -= rhs; }
    friend CMat operator*(double scale, CMat m) { return m *= scale; }

    /// Dense matrix product (row-major, ascending-index accumulation).
    friend CMat operator*(const CMat& lhs, const CMat& rhs);

    [[nodiscard]] CMat adjoint() const;
    [[nodiscard]] cplx trace() const;

    /// Largest |entry| of (*this - other); both operands must be square of
    /// equal dimension.
    [[nodiscard]] double max_abs_diff(const CMat& other) const;
    /// Largest |entry|.
    [[nodiscard]] double max_abs() const;
    /// Largest |m(r,c) - conj(m(c,r))|.
    [[nodiscard]] double hermiticity_defect() const;

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

/// Tr(a * b) without forming the product.
cplx trace_product(const CMat& a, const CMat& b);

/**
 * Eigensystem of a Hermitian matrix: eigenvalues sorted descending with
 * the matching orthonormal eigenvectors as columns, phase-fixed so the
 * first component above 1e-12 in magnitude is real and positive.
 */
struct Spectrum {
    std::vector<double> eigenvalues;
    CMat eigenvectors;

    /// Rebuild sum_j lambda_j v_j v_j^dagger (used by invariant checks).
    [[nodiscard]] CMat reconstruct() const;
};

/**
 * Full eigensystem of a Hermitian matrix via cyclic complex Jacobi
 * rotations. The input must be Hermitian within 1e-10 (NonHermitian
 * otherwise); iteration stops once the off-diagonal Frobenius norm drops
 * below 1e-13 and reports NoConvergence after 100 sweeps. Robust and
 * deterministic, which matters more than speed at dimension <= 64.
 */
Spectrum hermitian_eigen(const CMat& m);

/**
 * Hermitian, positive semidefinite, trace-one operator on n qubits.
 *
 * The checked factories enforce all three invariants (Hermitian within
 * 1e-12, trace within 1e-12 of one, eigenvalues >= -1e-12). unchecked()
 * skips validation for hot paths whose outputs are valid by construction,
 * such as Pauli conjugation and convex mixing.
 */
class DensityOperator {
  public:
    /// Validates Hermiticity, trace and positive semidefiniteness, then
    /// stores the symmetrized matrix (m + m^dagger)/2.
    static DensityOperator from_matrix(int n_qubits, CMat m);
    /// Diagonal state from a probability vector of length 2^n.
    static DensityOperator from_diagonal(int n_qubits,
                                         std::span<const double> weights);
    /// No validation; caller guarantees the invariants hold.
    static DensityOperator unchecked(int n_qubits, CMat m);

    [[nodiscard]] int n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const { return mat_.size(); }
    [[nodiscard]] const CMat& matrix() const { return mat_; }

  private:
    DensityOperator(int n_qubits, CMat m)
        : n_qubits_(n_qubits), mat_(std::move(m)) {}

    int n_qubits_ = 0;
    CMat mat_;
};

/// 1/2 tr|rho - sigma|: eigenvalues of the Hermitian difference, halved
/// absolute sum. DimensionMismatch if the operands differ in size.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

/// Tr(rho^2), computed entrywise as sum |rho_xy|^2.
double purity(const DensityOperator& rho);

/// -log2 of the largest eigenvalue, clamped at zero.
double min_entropy(const DensityOperator& rho);

/// I / 2^n.
DensityOperator maximally_mixed(int n_qubits);

/// |psi><psi| from an amplitude vector of length 2^n (normalized here).
DensityOperator pure_state(int n_qubits, std::span<const cplx> amplitudes);

/// Computational basis state |index><index|.
DensityOperator basis_state(int n_qubits, std::uint64_t index);

/// Convex mixture sum_i w_i rho_i; weights must sum to one within 1e-12.
DensityOperator mix(std::span<const std::pair<double, DensityOperator>> terms);

} // namespace qepad
