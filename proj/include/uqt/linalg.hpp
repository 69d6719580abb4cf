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

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "uqt/error.hpp"

/// @file
/// Small dense complex kernels for one- and two-qubit operators.
/// Subsystem 1 is the leftmost tensor factor (Alice); the 4x4 basis is
/// {|00>, |01>, |10>, |11>}.

namespace uqt {

template <typename Real> using Matrix2c = Eigen::Matrix<std::complex<Real>, 2, 2>;
template <typename Real> using Matrix4c = Eigen::Matrix<std::complex<Real>, 4, 4>;
template <typename Real> using Vector4c = Eigen::Matrix<std::complex<Real>, 4, 1>;

using cplx = std::complex<double>;
using Mat2 = Matrix2c<double>;
using Mat4 = Matrix4c<double>;
using Vec4 = Vector4c<double>;
using ComplexMat = Eigen::MatrixXcd;

namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double eig = 1e-10;
inline constexpr double rank = 1e-9;
inline constexpr double cls = 1e-9;
inline constexpr double uqt = 1e-9;
inline constexpr double cptp = 1e-9;
inline constexpr double trace = 1e-10;
inline constexpr double min_eig = 1e-9;
} // namespace tol

/// sigma_0 = I, sigma_1..3 = Pauli X, Y, Z.
template <typename Real = double> Matrix2c<Real> pauli(int i) {
    using C = std::complex<Real>;
    Matrix2c<Real> m;
    switch (i) {
    case 0: m << C(1), C(0), C(0), C(1); break;
    case 1: m << C(0), C(1), C(1), C(0); break;
    case 2: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case 3: m << C(1), C(0), C(0), C(-1); break;
    default: throw DimensionError("pauli index must be in 0..3, got " + std::to_string(i));
    }
    return m;
}

template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, 4, 4>
tensor(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    static_assert(std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                  "tensor: scalar types differ");
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
        throw DimensionError("tensor: both factors must be 2x2");
    }
    Eigen::Matrix<typename DerivedA::Scalar, 4, 4> out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

/// Reduced operator on subsystem `keep` (1 = Alice, 2 = Bob).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 2, 2>
partial_trace(const Eigen::MatrixBase<Derived> &m, int keep) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw DimensionError("partial_trace: input must be 4x4");
    }
    Eigen::Matrix<typename Derived::Scalar, 2, 2> out;
    out.setZero();
    if (keep == 1) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) out(i, j) += m(2 * i + k, 2 * j + k);
    } else if (keep == 2) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) out(i, j) += m(2 * k + i, 2 * k + j);
    } else {
        throw DimensionError("partial_trace: subsystem must be 1 or 2, got " +
                             std::to_string(keep));
    }
    return out;
}

template <typename Derived> double hermiticity_residual(const Eigen::MatrixBase<Derived> &m) {
    if (m.rows() != m.cols()) throw DimensionError("matrix is not square");
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Bell vectors in the order Phi1 = (|00>+|11>)/sqrt2, Phi2 = (|01>+|10>)/sqrt2,
/// Phi3 = (|01>-|10>)/sqrt2, Phi4 = (|00>-|11>)/sqrt2.
inline Vec4 bell_vector(int k) {
    const double h = 1.0 / std::sqrt(2.0);
    Vec4 v = Vec4::Zero();
    switch (k) {
    case 1: v(0) = h; v(3) = h; break;
    case 2: v(1) = h; v(2) = h; break;
    case 3: v(1) = h; v(2) = -h; break;
    case 4: v(0) = h; v(3) = -h; break;
    default: throw DimensionError("bell index must be in 1..4, got " + std::to_string(k));
    }
    return v;
}

} // namespace uqt
