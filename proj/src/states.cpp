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

#include "uqt/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uqt/hermitian_eig.hpp"

namespace uqt {

HSDecomposition hs_decompose(const Mat4 &rho) {
    HSDecomposition hs;
    const Mat2 id = pauli(0);
    for (int i = 1; i <= 3; ++i) {
        hs.r(i - 1) = (rho * tensor(pauli(i), id)).trace().real();
        hs.s(i - 1) = (rho * tensor(id, pauli(i))).trace().real();
        for (int j = 1; j <= 3; ++j) {
            hs.t(i - 1, j - 1) = (rho * tensor(pauli(i), pauli(j))).trace().real();
        }
    }
    return hs;
}

Mat4 hs_recompose(const HSDecomposition &hs) {
    const Mat2 id = pauli(0);
    Mat4 m = Mat4::Identity();
    for (int i = 1; i <= 3; ++i) {
        m += hs.r(i - 1) * tensor(pauli(i), id);
        m += hs.s(i - 1) * tensor(id, pauli(i));
        for (int j = 1; j <= 3; ++j) m += hs.t(i - 1, j - 1) * tensor(pauli(i), pauli(j));
    }
    return m / 4.0;
}

TwoQubitState TwoQubitState::from_density(const Mat4 &m) {
    const double herm = hermiticity_residual(m);
    if (herm > tol::herm) {
        throw ValidationError(ValidationError::Kind::NotHermitian, herm,
                              "density matrix is not Hermitian (residual " +
                                  std::to_string(herm) + ")");
    }
    const Mat4 rho = (m + m.adjoint()) / 2.0;
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > tol::trace) {
        throw ValidationError(ValidationError::Kind::Trace, tr,
                              "density matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    const double lmin = hermitian_eig(rho).eigenvalues.minCoeff();
    if (lmin < -tol::min_eig) {
        throw ValidationError(ValidationError::Kind::NegativeEigenvalue, lmin,
                              "density matrix has negative eigenvalue " + std::to_string(lmin));
    }
    return TwoQubitState(rho, hs_decompose(rho));
}

TwoQubitState pure_state(double a) {
    if (!(a >= 0.5 && a < 1.0)) {
        throw RangeError("pure_state: a must lie in [1/2, 1), got " + std::to_string(a));
    }
    Vec4 v = Vec4::Zero();
    v(0) = std::sqrt(a);
    v(3) = std::sqrt(1.0 - a);
    return TwoQubitState::from_density(v * v.adjoint());
}

double pure_state_a_for_concurrence(double c) {
    if (!(c > 0.0 && c <= 1.0)) {
        throw RangeError("concurrence must lie in (0, 1], got " + std::to_string(c));
    }
    return 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
}

TwoQubitState bell_state(int k) {
    const Vec4 v = bell_vector(k);
    return TwoQubitState::from_density(v * v.adjoint());
}

double concurrence(const TwoQubitState &s) {
    const Mat4 yy = tensor(pauli(2), pauli(2));
    const Mat4 tilde = yy * s.rho().conjugate() * yy;
    const Mat4 root = psd_sqrt(s.rho());
    Mat4 m = root * tilde * root;
    m = (m + m.adjoint()) / 2.0;
    const Eigen::Vector4d ev = hermitian_eig(m).eigenvalues;
    std::array<double, 4> lam;
    for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(ev(i), 0.0));
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

CorrelationSpectrum correlation_spectrum(const TwoQubitState &s) {
    const Eigen::Matrix3d &t = s.hs().t;
    CorrelationSpectrum out;
    out.det_t = t.determinant();
    if ((t - t.transpose()).cwiseAbs().maxCoeff() <= 1e-12) {
        const auto d = hermitian_eig(t);
        std::array<int, 3> idx{0, 1, 2};
        std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
            return std::abs(d.eigenvalues(i)) > std::abs(d.eigenvalues(j));
        });
        std::array<int, 3> signs{};
        for (int k = 0; k < 3; ++k) {
            const double v = d.eigenvalues(idx[k]);
            out.abs_t(k) = std::abs(v);
            signs[k] = v < 0 ? -1 : 1;
        }
        out.signs = signs;
    } else {
        const Eigen::Matrix3d tt = t.transpose() * t;
        const auto d = hermitian_eig(tt);
        for (int k = 0; k < 3; ++k) out.abs_t(k) = std::sqrt(std::max(d.eigenvalues(k), 0.0));
    }
    return out;
}

TeleportProfile profile_from_spectrum(const CorrelationSpectrum &spec) {
    TeleportProfile p;
    p.spectrum = spec;
    p.det_t = spec.det_t;
    const Eigen::Vector3d &a = spec.abs_t;
    p.formula_valid = spec.det_t < 0.0 || a.minCoeff() <= kZeroCorrelation;
    if (!p.formula_valid) return p;

    p.f_max = 0.5 * (1.0 + a.sum() / 3.0);
    const double d01 = a(0) - a(1), d02 = a(0) - a(2), d12 = a(1) - a(2);
    p.delta = std::sqrt(d01 * d01 + d02 * d02 + d12 * d12) / (3.0 * std::sqrt(10.0));
    const double spread = std::max({std::abs(d01), std::abs(d02), std::abs(d12)});

    p.useful = *p.f_max > 2.0 / 3.0 + tol::cls;
    p.universal = spread <= tol::uqt && *p.delta <= tol::uqt;
    p.uqt = p.useful && p.universal && a.minCoeff() > 1.0 / 3.0 + tol::cls;
    return p;
}

TeleportProfile profile(const TwoQubitState &s) {
    return profile_from_spectrum(correlation_spectrum(s));
}

} // namespace uqt
