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

#include "qepad/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qepad {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::internal: return "Internal";
    case ErrorCode::non_hermitian: return "NonHermitian";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::zero_index: return "ZeroIndex";
    case ErrorCode::domain_too_large: return "DomainTooLarge";
    case ErrorCode::entropy_too_low: return "EntropyTooLow";
    case ErrorCode::mass_not_normalized: return "MassNotNormalized";
    case ErrorCode::bad_parameters: return "BadParameters";
    case ErrorCode::bad_key: return "BadKey";
    case ErrorCode::bad_index: return "BadIndex";
    case ErrorCode::label_mismatch: return "LabelMismatch";
    case ErrorCode::no_witness: return "NoWitness";
    case ErrorCode::constant_predicate: return "ConstantPredicate";
    case ErrorCode::config_parse: return "ConfigParse";
    case ErrorCode::io: return "Io";
    }
    return "Unknown";
}

CMat CMat::identity(std::size_t dim) {
    CMat m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m(i, i) = 1.0;
    return m;
}

CMat& CMat::operator+=(const CMat& other) {
    if (dim_ != other.dim_)
        raise(ErrorCode::dimension_mismatch, "matrix sum of unequal dimensions");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += other.entries_[i];
    return *this;
}

CMat& CMat::operator-=(const CMat& other) {
    if (dim_ != other.dim_)
        raise(ErrorCode::dimension_mismatch, "matrix difference of unequal dimensions");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= other.entries_[i];
    return *this;
}

CMat& CMat::operator*=(double scale) {
    for (auto& e : entries_)
        e *= scale;
    return *this;
}

CMat operator*(const CMat& lhs, const CMat& rhs) {
    if (lhs.size() != rhs.size())
        raise(ErrorCode::dimension_mismatch, "matrix product of unequal dimensions");
    const std::size_t d = lhs.size();
    CMat out(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < d; ++k)
                acc += lhs(r, k) * rhs(k, c);
            out(r, c) = acc;
        }
    return out;
}

CMat CMat::adjoint() const {
    CMat out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            out(r, c) = std::conj((*this)(c, r));
    return out;
}

cplx CMat::trace() const {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        acc += (*this)(i, i);
    return acc;
}

double CMat::max_abs_diff(const CMat& other) const {
    if (dim_ != other.dim_)
        raise(ErrorCode::dimension_mismatch, "max_abs_diff of unequal dimensions");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

double CMat::max_abs() const {
    double worst = 0.0;
    for (const auto& e : entries_)
        worst = std::max(worst, std::abs(e));
    return worst;
}

double CMat::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            worst = std::max(worst,
                             std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

cplx trace_product(const CMat& a, const CMat& b) {
    if (a.size() != b.size())
        raise(ErrorCode::dimension_mismatch, "trace_product of unequal dimensions");
    const std::size_t d = a.size();
    cplx acc = 0.0;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            acc += a(r, c) * b(c, r);
    return acc;
}

CMat Spectrum::reconstruct() const {
    const std::size_t d = eigenvectors.size();
    CMat out(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                out(r, c) += eigenvalues[j] * eigenvectors(r, j) *
                             std::conj(eigenvectors(c, j));
    return out;
}

namespace {

double offdiag_frobenius(const CMat& a) {
    const std::size_t d = a.size();
    double acc = 0.0;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            if (r != c)
                acc += std::norm(a(r, c));
    return std::sqrt(acc);
}

// Fix the global phase so the first component with magnitude above 1e-12
// is real positive. Keeps the eigenvector ordering convention stable.
void normalize_column_phase(CMat& v, std::size_t col) {
    const std::size_t d = v.size();
    for (std::size_t r = 0; r < d; ++r) {
        const double mag = std::abs(v(r, col));
        if (mag > 1e-12) {
            const cplx factor = std::conj(v(r, col)) / mag;
            for (std::size_t rr = 0; rr < d; ++rr)
                v(rr, col) *= factor;
            return;
        }
    }
}

} // namespace

Spectrum hermitian_eigen(const CMat& m) {
    const std::size_t d = m.size();
    if (d == 0)
        raise(ErrorCode::bad_parameters, "hermitian_eigen of empty matrix");
    if (m.hermiticity_defect() > kValidationTol)
        raise(ErrorCode::non_hermitian, "matrix is not Hermitian within 1e-10");

    // Work on the exactly-symmetrized copy so rounding in the input cannot
    // leak into the rotations.
    CMat a(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r + 1; c < d; ++c) {
            const cplx v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            a(r, c) = v;
            a(c, r) = std::conj(v);
        }
        a(r, r) = m(r, r).real();
    }
    CMat vec = CMat::identity(d);

    bool converged = false;
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (offdiag_frobenius(a) <= kJacobiOffTol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const cplx apq = a(p, q);
                const double absb = std::abs(apq);
                if (absb == 0.0)
                    continue;
                const cplx phase = apq / absb;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * absb);
                const double t = tau >= 0.0
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx pc = std::conj(phase);

                // A <- J^dagger A J with J the identity outside the (p,q)
                // plane, J(p,p)=c, J(p,q)=s, J(q,p)=-s e^{-i phi},
                // J(q,q)=c e^{-i phi}.
                for (std::size_t r = 0; r < d; ++r) {
                    const cplx mp = a(r, p);
                    const cplx mq = a(r, q);
                    a(r, p) = c * mp - s * pc * mq;
                    a(r, q) = s * mp + c * pc * mq;
                }
                for (std::size_t col = 0; col < d; ++col) {
                    const cplx mp = a(p, col);
                    const cplx mq = a(q, col);
                    a(p, col) = c * mp - s * phase * mq;
                    a(q, col) = s * mp + c * phase * mq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t r = 0; r < d; ++r) {
                    const cplx vp = vec(r, p);
                    const cplx vq = vec(r, q);
                    vec(r, p) = c * vp - s * pc * vq;
                    vec(r, q) = s * vp + c * pc * vq;
                }
            }
        }
    }
    if (!converged && offdiag_frobenius(a) > kJacobiOffTol)
        raise(ErrorCode::no_convergence,
              "Jacobi iteration did not converge within 100 sweeps");

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    Spectrum out;
    out.eigenvalues.resize(d);
    out.eigenvectors = CMat(d);
    for (std::size_t j = 0; j < d; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t r = 0; r < d; ++r)
            out.eigenvectors(r, j) = vec(r, order[j]);
        normalize_column_phase(out.eigenvectors, j);
    }
    return out;
}

namespace {

std::size_t dim_for_qubits(int n_qubits) {
    if (n_qubits < 0 || n_qubits > 6)
        raise(ErrorCode::bad_parameters, "qubit count must be in [0, 6]");
    return std::size_t{1} << n_qubits;
}

} // namespace

DensityOperator DensityOperator::from_matrix(int n_qubits, CMat m) {
    const std::size_t d = dim_for_qubits(n_qubits);
    if (m.size() != d)
        raise(ErrorCode::dimension_mismatch, "matrix dimension is not 2^n");
    if (m.hermiticity_defect() > kArithmeticTol)
        raise(ErrorCode::non_hermitian, "density operator must be Hermitian within 1e-12");
    if (std::abs(m.trace() - 1.0) > kArithmeticTol)
        raise(ErrorCode::bad_parameters, "density operator trace must be 1 within 1e-12");

    CMat sym(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r + 1; c < d; ++c) {
            const cplx v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            sym(r, c) = v;
            sym(c, r) = std::conj(v);
        }
        sym(r, r) = m(r, r).real();
    }
    const Spectrum spec = hermitian_eigen(sym);
    if (spec.eigenvalues.back() < -kArithmeticTol)
        raise(ErrorCode::bad_parameters, "density operator has a negative eigenvalue");
    return DensityOperator(n_qubits, std::move(sym));
}

DensityOperator DensityOperator::from_diagonal(int n_qubits,
                                               std::span<const double> weights) {
    const std::size_t d = dim_for_qubits(n_qubits);
    if (weights.size() != d)
        raise(ErrorCode::dimension_mismatch, "diagonal length is not 2^n");
    double sum = 0.0;
    for (double w : weights) {
        if (w < -kArithmeticTol)
            raise(ErrorCode::bad_parameters, "negative diagonal weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kArithmeticTol)
        raise(ErrorCode::mass_not_normalized, "diagonal weights must sum to 1");
    CMat m(d);
    for (std::size_t i = 0; i < d; ++i)
        m(i, i) = std::max(weights[i], 0.0);
    return DensityOperator(n_qubits, std::move(m));
}

DensityOperator DensityOperator::unchecked(int n_qubits, CMat m) {
    return DensityOperator(n_qubits, std::move(m));
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim())
        raise(ErrorCode::dimension_mismatch, "trace_distance of unequal dimensions");
    CMat diff = rho.matrix();
    diff -= sigma.matrix();
    const Spectrum spec = hermitian_eigen(diff);
    double acc = 0.0;
    for (double lambda : spec.eigenvalues)
        acc += std::abs(lambda);
    return 0.5 * acc;
}

double purity(const DensityOperator& rho) {
    // Tr(rho^2) = sum_{x,y} |rho_xy|^2 for Hermitian rho.
    double acc = 0.0;
    for (const auto& e : rho.matrix().entries())
        acc += std::norm(e);
    return acc;
}

double min_entropy(const DensityOperator& rho) {
    const Spectrum spec = hermitian_eigen(rho.matrix());
    const double lambda_max = spec.eigenvalues.front();
    if (lambda_max <= 0.0)
        raise(ErrorCode::bad_parameters, "state has no positive eigenvalue");
    return std::max(0.0, -std::log2(lambda_max));
}

DensityOperator maximally_mixed(int n_qubits) {
    const std::size_t d = dim_for_qubits(n_qubits);
    CMat m(d);
    const double w = 1.0 / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i)
        m(i, i) = w;
    return DensityOperator::unchecked(n_qubits, std::move(m));
}

DensityOperator pure_state(int n_qubits, std::span<const cplx> amplitudes) {
    const std::size_t d = dim_for_qubits(n_qubits);
    if (amplitudes.size() != d)
        raise(ErrorCode::dimension_mismatch, "amplitude vector length is not 2^n");
    double norm2 = 0.0;
    for (const auto& a : amplitudes)
        norm2 += std::norm(a);
    if (norm2 <= 0.0)
        raise(ErrorCode::bad_parameters, "zero amplitude vector");
    CMat m(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            m(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm2;
    return DensityOperator::unchecked(n_qubits, std::move(m));
}

DensityOperator basis_state(int n_qubits, std::uint64_t index) {
    const std::size_t d = dim_for_qubits(n_qubits);
    if (index >= d)
        raise(ErrorCode::bad_parameters, "basis index out of range");
    CMat m(d);
    m(index, index) = 1.0;
    return DensityOperator::unchecked(n_qubits, std::move(m));
}

DensityOperator mix(std::span<const std::pair<double, DensityOperator>> terms) {
    if (terms.empty())
        raise(ErrorCode::bad_parameters, "empty mixture");
    const std::size_t d = terms.front().second.dim();
    const int n = terms.front().second.n_qubits();
    double total = 0.0;
    CMat acc(d);
    for (const auto& [w, rho] : terms) {
        if (rho.dim() != d)
            raise(ErrorCode::dimension_mismatch, "mixture of unequal dimensions");
        if (w < 0.0)
            raise(ErrorCode::bad_parameters, "negative mixture weight");
        total += w;
        for (std::size_t i = 0; i < d * d; ++i)
            acc.entries()[i] += w * rho.matrix().entries()[i];
    }
    if (std::abs(total - 1.0) > kArithmeticTol)
        raise(ErrorCode::mass_not_normalized, "mixture weights must sum to 1");
    return DensityOperator::unchecked(n, std::move(acc));
}

} // namespace qepad
