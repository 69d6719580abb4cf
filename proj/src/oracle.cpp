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

#include "uqt/oracle.hpp"

#include <cmath>
#include <random>

#include <Eigen/Geometry>

#include "uqt/random.hpp"

namespace uqt::oracle {

namespace {

using Mat8 = Eigen::Matrix<cplx, 8, 8>;

double pairwise(const double *v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise(v, h) + pairwise(v + h, n - h);
}

} // namespace

double pairwise_sum(const std::vector<double> &v) { return pairwise(v.data(), v.size()); }

void gauss_legendre(int n, std::vector<double> &x, std::vector<double> &w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        x[lo] = -z;
        x[hi] = z;
        w[lo] = w[hi] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

QuadratureRule quadrature_rule(const QuadratureSpec &q) {
    QuadratureRule rule;
    if (q.mc_samples) {
        const int n = *q.mc_samples;
        if (n < 1) throw RangeError("quadrature: mc_samples must be positive");
        for (int i = 0; i < n; ++i) {
            auto rng = random::stream(q.seed, static_cast<std::uint64_t>(i));
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const double cz = 2.0 * u(rng) - 1.0;
            rule.theta.push_back(std::acos(cz));
            rule.phi.push_back(2.0 * M_PI * u(rng));
            rule.weight.push_back(1.0 / n);
        }
        return rule;
    }
    if (q.n_theta < 2 || q.n_phi < 4) {
        throw RangeError("quadrature: need n_theta >= 2 and n_phi >= 4");
    }
    std::vector<double> x, w;
    gauss_legendre(q.n_theta, x, w);
    for (int i = 0; i < q.n_theta; ++i) {
        for (int j = 0; j < q.n_phi; ++j) {
            rule.theta.push_back(std::acos(x[static_cast<std::size_t>(i)]));
            rule.phi.push_back(2.0 * M_PI * j / q.n_phi);
            rule.weight.push_back(w[static_cast<std::size_t>(i)] / 2.0 / q.n_phi);
        }
    }
    return rule;
}

Mat2 bloch_density(const Eigen::Vector3d &n) {
    return (pauli(0) + n(0) * pauli(1) + n(1) * pauli(2) + n(2) * pauli(3)) / 2.0;
}

Eigen::Vector3d bloch_vector(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Mat2 correction(int outcome) {
    switch (outcome) {
    case 1: return pauli(0);
    case 2: return pauli(1);
    case 3: return pauli(3) * pauli(1);
    case 4: return pauli(3);
    default: throw DimensionError("Bell outcome must be in 1..4");
    }
}

Mat2 teleport_output(const TwoQubitState &shared, const Eigen::Vector3d &n) {
    const Mat2 in = bloch_density(n);
    // Register order: input, Alice, Bob.
    Mat8 total;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) total.block<4, 4>(4 * i, 4 * j) = in(i, j) * shared.rho();

    Mat2 out = Mat2::Zero();
    for (int k = 1; k <= 4; ++k) {
        const Vec4 b = bell_vector(k);
        Mat2 bob = Mat2::Zero();
        for (int a = 0; a < 4; ++a)
            for (int c = 0; c < 4; ++c) {
                const cplx amp = std::conj(b(a)) * b(c);
                if (amp == cplx(0.0)) continue;
                bob += amp * total.block<2, 2>(2 * a, 2 * c);
            }
        const Mat2 u = correction(k);
        out += u * bob * u.adjoint();
    }
    return out;
}

double teleport_fidelity(const TwoQubitState &shared, const Eigen::Vector3d &n) {
    return (bloch_density(n) * teleport_output(shared, n)).trace().real();
}

NumericMoments numeric_moments(const TwoQubitState &shared, const QuadratureSpec &q) {
    const QuadratureRule rule = quadrature_rule(q);
    std::vector<double> f1(rule.weight.size()), f2(rule.weight.size());
    for (std::size_t i = 0; i < rule.weight.size(); ++i) {
        const double f = teleport_fidelity(shared, bloch_vector(rule.theta[i], rule.phi[i]));
        f1[i] = rule.weight[i] * f;
        f2[i] = rule.weight[i] * f * f;
    }
    NumericMoments m;
    m.mean_f = pairwise_sum(f1);
    m.second_f = pairwise_sum(f2);
    m.delta = std::sqrt(std::max(0.0, m.second_f - m.mean_f * m.mean_f));
    return m;
}

Eigen::Matrix3d rotation_from_su2(const Mat2 &u) {
    Eigen::Matrix3d o;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            o(i - 1, j - 1) = 0.5 * (pauli(i) * u * pauli(j) * u.adjoint()).trace().real();
    return o;
}

Mat2 su2_from_rotation(const Eigen::Matrix3d &o) {
    const Eigen::Quaterniond q(o);
    return q.w() * pauli(0) - cplx(0.0, 1.0) * (q.x() * pauli(1) + q.y() * pauli(2) + q.z() * pauli(3));
}

Canonical canonicalize(const TwoQubitState &s) {
    const Eigen::Matrix3d &t = s.hs().t;
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d a = svd.matrixU(), b = svd.matrixV();
    Eigen::Vector3d d = svd.singularValues();
    if (a.determinant() < 0) {
        a.col(2) *= -1.0;
        d(2) *= -1.0;
    }
    if (b.determinant() < 0) {
        b.col(2) *= -1.0;
        d(2) *= -1.0;
    }
    Mat2 u1 = su2_from_rotation(a.transpose());
    const Mat2 u2 = su2_from_rotation(b.transpose());

    // Sign rule, realized with pi rotations sigma_k on Alice (flip entries != k).
    const auto nonzero = [&](int i) { return std::abs(d(i)) > kZeroCorrelation; };
    std::array<int, 3> target{-1, -1, -1};
    if (d.prod() > 0 && nonzero(0) && nonzero(1) && nonzero(2)) {
        int smallest = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(d(i)) < std::abs(d(smallest))) smallest = i;
        target[static_cast<std::size_t>(smallest)] = 1;
    }
    std::vector<int> flip;
    int zero = -1;
    for (int i = 0; i < 3; ++i) {
        if (!nonzero(i)) {
            zero = i;
            continue;
        }
        if ((d(i) < 0 ? -1 : 1) != target[static_cast<std::size_t>(i)]) flip.push_back(i);
    }
    if (flip.size() % 2 == 1 && zero >= 0) flip.push_back(zero);
    if (flip.size() == 2) {
        const int k = 3 - flip[0] - flip[1];
        u1 = pauli(k + 1) * u1;
    }

    const Mat4 u = tensor(u1, u2);
    Mat4 rho = u * s.rho() * u.adjoint();
    return Canonical{TwoQubitState::from_density(rho), u1, u2};
}

TwoQubitState align_to_protocol(const TwoQubitState &canonical) {
    const Mat4 u = tensor(pauli(2), Mat2(Mat2::Identity()));
    return TwoQubitState::from_density(u * canonical.rho() * u.adjoint());
}

NumericMoments optimal_moments(const TwoQubitState &s, const QuadratureSpec &q) {
    return numeric_moments(align_to_protocol(canonicalize(s).state), q);
}

} // namespace uqt::oracle
