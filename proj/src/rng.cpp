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

#include "qepad/rng.hpp"

#include <cmath>

namespace qepad {

CMat random_unitary(std::size_t dim, Rng& rng) {
    CMat g(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            g(r, c) = cplx(rng.normal(), rng.normal());

    // Modified Gram-Schmidt over the columns.
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx inner = 0.0;
            for (std::size_t r = 0; r < dim; ++r)
                inner += std::conj(g(r, prev)) * g(r, c);
            for (std::size_t r = 0; r < dim; ++r)
                g(r, c) -= inner * g(r, prev);
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < dim; ++r)
            norm2 += std::norm(g(r, c));
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < dim; ++r)
            g(r, c) *= inv;
        // Absorb the residual phase so the distribution is Haar-like
        // rather than biased by the Gram-Schmidt sign choices.
        const double mag = std::abs(g(c, c));
        if (mag > 1e-14) {
            const cplx phase = std::conj(g(c, c)) / mag;
            for (std::size_t r = 0; r < dim; ++r)
                g(r, c) *= phase;
        }
    }
    return g;
}

std::vector<double> random_distribution(std::size_t len, Rng& rng) {
    std::vector<double> w(len);
    double sum = 0.0;
    for (auto& x : w) {
        x = rng.uniform() + 1e-12;
        sum += x;
    }
    for (auto& x : w)
        x /= sum;
    return w;
}

CMat random_hermitian(std::size_t dim, Rng& rng) {
    CMat m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = rng.normal();
        for (std::size_t c = r + 1; c < dim; ++c) {
            const cplx v(rng.normal(), rng.normal());
            m(r, c) = v;
            m(c, r) = std::conj(v);
        }
    }
    return m;
}

DensityOperator random_density(int n_qubits, Rng& rng) {
    const std::size_t d = std::size_t{1} << n_qubits;
    // G G^dagger / Tr: positive by construction, full rank almost surely.
    CMat g(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            g(r, c) = cplx(rng.normal(), rng.normal());
    CMat m = g * g.adjoint();
    const double tr = m.trace().real();
    m *= 1.0 / tr;
    return DensityOperator::unchecked(n_qubits, std::move(m));
}

} // namespace qepad
