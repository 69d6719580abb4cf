// Copyright 2026 The uqt Authors.
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

#include "uqt/random.hpp"

#include "uqt/hermitian_eig.hpp"

namespace uqt::random {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng stream(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix64(seed ^ index)); }

Eigen::MatrixXcd ginibre(Rng &rng, int rows, int cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cplx(re, im);
        }
    return g;
}

Eigen::MatrixXcd haar_unitary(Rng &rng, int n) {
    const Eigen::MatrixXcd g = ginibre(rng, n, n);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd r = qr.matrixQR();
    for (int i = 0; i < n; ++i) {
        const double mag = std::abs(r(i, i));
        if (mag > 0) q.col(i) *= r(i, i) / mag;
    }
    return q;
}

Mat2 haar_unitary2(Rng &rng) { return haar_unitary(rng, 2); }

Vec4 random_pure(Rng &rng) {
    Vec4 v = ginibre(rng, 4, 1);
    return v.normalized();
}

TwoQubitState random_state(Rng &rng, int rank) {
    const Eigen::MatrixXcd g = ginibre(rng, 4, rank);
    Mat4 m = g * g.adjoint();
    m /= m.trace().real();
    return TwoQubitState::from_density(m);
}

Mat4 random_hermitian(Rng &rng) {
    const Eigen::MatrixXcd g = ginibre(rng, 4, 4);
    Mat4 m = (g + g.adjoint()) / 2.0;
    return m / m.cwiseAbs().maxCoeff();
}

QubitChannel random_channel(Rng &rng, int count) {
    const Eigen::MatrixXcd u = haar_unitary(rng, 2 * count);
    KrausList kraus;
    for (int k = 0; k < count; ++k) kraus.push_back(u.block(2 * k, 0, 2, 2));
    return validate(std::move(kraus), "random");
}

Mat4 random_choi(Rng &rng, int rank) {
    const Eigen::MatrixXcd g = ginibre(rng, 4, rank);
    const Mat4 x = g * g.adjoint();
    // Normalize with (X_A^{-1/2} / sqrt2 x I) so the Alice marginal is I/2.
    const Mat2 xa = partial_trace(x, 1);
    const auto d = hermitian_eig(xa);
    Mat2 inv_root = Mat2::Zero();
    for (int i = 0; i < 2; ++i) {
        inv_root += (1.0 / std::sqrt(d.eigenvalues(i))) * d.eigenvectors.col(i) *
                    d.eigenvectors.col(i).adjoint();
    }
    const Mat4 l = tensor(Mat2(inv_root / std::sqrt(2.0)), Mat2(Mat2::Identity()));
    Mat4 rho = l * x * l.adjoint();
    return (rho + rho.adjoint()) / 2.0;
}

} // namespace uqt::random
