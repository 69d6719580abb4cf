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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "uqt/linalg.hpp"

namespace uqt {

template <typename Real, int N> struct EigenDecomp {
    Eigen::Matrix<Real, N, 1> eigenvalues;                    // descending
    Eigen::Matrix<std::complex<Real>, N, N> eigenvectors;     // columns
};

namespace detail {

template <typename T> struct real_of { using type = T; };
template <typename T> struct real_of<std::complex<T>> { using type = T; };

inline constexpr int kMaxSweeps = 100;

template <typename Real, int N>
void jacobi_sweeps(Eigen::Matrix<std::complex<Real>, N, N> &a,
                   Eigen::Matrix<std::complex<Real>, N, N> &v) {
    using C = std::complex<Real>;
    const int n = static_cast<int>(a.rows());
    const Real stop = Real(1e-14) * std::max(Real(1), a.norm());
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        Real off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2 * std::norm(a(p, q));
        if (std::sqrt(off) < stop) return;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Real g = std::abs(a(p, q));
                if (g == Real(0)) continue;
                // Phase-rotate q so a(p,q) becomes real, then a real Givens step.
                const C phase = a(p, q) / g;
                const Real theta = (a(q, q).real() - a(p, p).real()) / (2 * g);
                const Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                               (std::abs(theta) + std::sqrt(theta * theta + 1));
                const Real c = 1 / std::sqrt(t * t + 1);
                const Real s = t * c;
                const C gqp = -s * std::conj(phase);
                const C gqq = c * std::conj(phase);

                for (int k = 0; k < n; ++k) {
                    const C akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + gqp * akq;
                    a(k, q) = s * akp + gqq * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const C apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(gqp) * aqk;
                    a(q, k) = s * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = C(0);
                a(q, p) = C(0);
                a(p, p) = C(a(p, p).real());
                a(q, q) = C(a(q, q).real());
                for (int k = 0; k < n; ++k) {
                    const C vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + gqp * vkq;
                    v(k, q) = s * vkp + gqq * vkq;
                }
            }
        }
    }
}

template <typename Vec> void fix_phase(Vec &&col) {
    using Real = typename real_of<typename std::decay_t<Vec>::Scalar>::type;
    for (Eigen::Index i = 0; i < col.size(); ++i) {
        const Real mag = std::abs(col(i));
        if (mag > Real(1e-12)) {
            col *= std::conj(col(i)) / mag;
            return;
        }
    }
}

// Lexicographic "greater" on (real, imag) of the components, with a
// tolerance so that rounding noise does not flip the order.
template <typename Vec> bool lex_greater(const Vec &a, const Vec &b) {
    constexpr double eps = 1e-12;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a(i).real() - b(i).real()) > eps) return a(i).real() > b(i).real();
        if (std::abs(a(i).imag() - b(i).imag()) > eps) return a(i).imag() > b(i).imag();
    }
    return false;
}

} // namespace detail

/// Eigendecomposition of a Hermitian (or real symmetric) matrix by cyclic
/// complex Jacobi rotations. Eigenvalues descend; degenerate clusters are
/// re-orthonormalized and put in a deterministic order.
template <typename Derived>
auto hermitian_eig(const Eigen::MatrixBase<Derived> &m) {
    using Real = typename detail::real_of<typename Derived::Scalar>::type;
    constexpr int N = Derived::RowsAtCompileTime;
    static_assert(N != Eigen::Dynamic, "hermitian_eig expects a fixed-size matrix");
    using CMat = Eigen::Matrix<std::complex<Real>, N, N>;

    if (hermiticity_residual(m) > tol::herm) {
        throw ValidationError(ValidationError::Kind::NotHermitian, hermiticity_residual(m),
                              "hermitian_eig: input is not Hermitian");
    }
    CMat a = m.template cast<std::complex<Real>>();
    a = (a + a.adjoint()).eval() / Real(2);
    CMat v = CMat::Identity();
    detail::jacobi_sweeps<Real, N>(a, v);

    std::array<int, N> order;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenDecomp<Real, N> out;
    for (int k = 0; k < N; ++k) {
        out.eigenvalues(k) = a(order[k], order[k]).real();
        out.eigenvectors.col(k) = v.col(order[k]);
    }

    const Real scale = std::max(Real(1), out.eigenvalues.cwiseAbs().maxCoeff());
    int start = 0;
    while (start < N) {
        int end = start + 1;
        while (end < N &&
               out.eigenvalues(end - 1) - out.eigenvalues(end) <= Real(tol::eig) * scale) {
            ++end;
        }
        // Modified Gram-Schmidt inside the cluster [start, end).
        for (int k = start; k < end; ++k) {
            for (int j = start; j < k; ++j) {
                const std::complex<Real> proj =
                    out.eigenvectors.col(j).dot(out.eigenvectors.col(k));
                out.eigenvectors.col(k) -= proj * out.eigenvectors.col(j);
            }
            out.eigenvectors.col(k).normalize();
        }
        for (int k = start; k < end; ++k) detail::fix_phase(out.eigenvectors.col(k));
        if (end - start > 1) {
            std::vector<Eigen::Matrix<std::complex<Real>, N, 1>> cols;
            for (int k = start; k < end; ++k) cols.push_back(out.eigenvectors.col(k));
            std::stable_sort(cols.begin(), cols.end(), [](const auto &x, const auto &y) {
                return detail::lex_greater(x, y);
            });
            for (int k = start; k < end; ++k) out.eigenvectors.col(k) = cols[k - start];
        }
        start = end;
    }
    return out;
}

template <typename Derived> bool is_psd(const Eigen::MatrixBase<Derived> &m, double tol) {
    return hermitian_eig(m).eigenvalues.minCoeff() >= -tol;
}

template <typename Derived>
int numeric_rank(const Eigen::MatrixBase<Derived> &m, double tol = tol::rank) {
    const auto ev = hermitian_eig(m).eigenvalues;
    const double top = static_cast<double>(ev.maxCoeff());
    if (top <= 0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        if (ev(i) > tol * top) ++r;
    return r;
}

/// Square root of a PSD matrix; negative rounding noise is clipped to zero.
template <typename Derived> auto psd_sqrt(const Eigen::MatrixBase<Derived> &m) {
    const auto d = hermitian_eig(m);
    using Real = typename decltype(d.eigenvalues)::Scalar;
    auto root = d.eigenvalues.unaryExpr([](Real x) { return std::sqrt(std::max(x, Real(0))); })
                    .template cast<std::complex<Real>>()
                    .eval();
    return (d.eigenvectors * root.asDiagonal() * d.eigenvectors.adjoint()).eval();
}

} // namespace uqt
