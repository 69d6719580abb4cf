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

#include <numeric>

#include "doctest.h"
#include "uqt/families.hpp"
#include "uqt/oracle.hpp"
#include "uqt/random.hpp"

using namespace uqt;
namespace orc = uqt::oracle;

TEST_CASE("gauss-legendre nodes and exactness") {
    std::vector<double> x, w;
    orc::gauss_legendre(3, x, w);
    REQUIRE(x.size() == 3);
    std::vector<double> xs = x;
    std::sort(xs.begin(), xs.end());
    CHECK(xs[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-14));
    CHECK(xs[1] == doctest::Approx(0.0).epsilon(1e-14));
    orc::gauss_legendre(10, x, w);
    for (int k = 0; k <= 19; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], k);
        const double want = k % 2 ? 0.0 : 2.0 / (k + 1);
        CHECK(s == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("quadrature rule integrates over the sphere") {
    const orc::QuadratureRule r = orc::quadrature_rule({16, 16, std::nullopt, 0});
    CHECK(std::accumulate(r.weight.begin(), r.weight.end(), 0.0) == doctest::Approx(1.0));
    double z2 = 0.0, x2y2 = 0.0;
    for (std::size_t i = 0; i < r.weight.size(); ++i) {
        const Eigen::Vector3d n = orc::bloch_vector(r.theta[i], r.phi[i]);
        z2 += r.weight[i] * n.z() * n.z();
        x2y2 += r.weight[i] * n.x() * n.x() * n.y() * n.y();
    }
    CHECK(z2 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(x2y2 == doctest::Approx(1.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("teleportation through Phi1 is perfect") {
    const TwoQubitState bell = bell_state(1);
    for (int i = 0; i < 20; ++i) {
        const Eigen::Vector3d n = orc::bloch_vector(0.15 * i, 0.3 * i);
        CHECK(orc::teleport_fidelity(bell, n) == doctest::Approx(1.0).epsilon(1e-13));
        const Mat2 out = orc::teleport_output(bell, n);
        CHECK((out - orc::bloch_density(n)).norm() < 1e-13);
    }
}

TEST_CASE("Werner states teleport every input equally") {
    // Weight p on Phi1: |t_ii| = (4p - 1)/3 and f(n) = (1 + t)/2 for every n.
    const TwoQubitState w = apply_to_bob(bell_state(1), families::werner(0.8));
    const double t = (4.0 * 0.8 - 1.0) / 3.0;
    for (int i = 0; i < 10; ++i) {
        const Eigen::Vector3d n = orc::bloch_vector(0.3 * i, 0.7 * i);
        CHECK(orc::teleport_fidelity(w, n) == doctest::Approx(0.5 * (1.0 + t)).epsilon(1e-13));
    }
    const orc::NumericMoments m = orc::numeric_moments(w);
    CHECK(m.mean_f == doctest::Approx(0.5 * (1.0 + t)).epsilon(1e-13));
    CHECK(m.delta < 1e-7);
}

TEST_CASE("su2 and rotation round trip") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto rng = random::stream(41, i);
        const Mat2 u = random::haar_unitary2(rng);
        const Eigen::Matrix3d o = orc::rotation_from_su2(u);
        CHECK((o * o.transpose() - Eigen::Matrix3d::Identity()).norm() < 1e-13);
        CHECK(o.determinant() == doctest::Approx(1.0).epsilon(1e-13));
        const Eigen::Matrix3d back = orc::rotation_from_su2(orc::su2_from_rotation(o));
        CHECK((back - o).norm() < 1e-12);
    }
}

TEST_CASE("canonical form is a local-unitary image with diagonal T") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        auto rng = random::stream(42, i);
        const TwoQubitState s = random::random_state(rng, 1 + static_cast<int>(i % 4));
        const orc::Canonical c = orc::canonicalize(s);
        const Mat4 u = tensor(c.u1, c.u2);
        CHECK((u * s.rho() * u.adjoint() - c.state.rho()).norm() < 1e-12);
        const Eigen::Matrix3d t = c.state.hs().t;
        CHECK((t - Eigen::Matrix3d(t.diagonal().asDiagonal())).norm() < 1e-12);
        Eigen::JacobiSVD<Eigen::Matrix3d> svd(s.hs().t);
        Eigen::Vector3d mags = t.diagonal().cwiseAbs();
        std::sort(mags.data(), mags.data() + 3, std::greater<>());
        CHECK((mags - svd.singularValues()).norm() < 1e-12);
        if (s.hs().t.determinant() < 0) {
            for (int k = 0; k < 3; ++k) CHECK(t(k, k) <= 1e-12);
        }
    }
}

TEST_CASE("optimal moments match the closed forms when det T < 0") {
    int done = 0;
    for (std::uint64_t i = 0; done < 15; ++i) {
        auto rng = random::stream(43, i);
        const TwoQubitState s = random::random_state(rng, 2);
        const Eigen::Matrix3d t = s.hs().t;
        if (t.determinant() >= 0) continue;
        ++done;
        Eigen::JacobiSVD<Eigen::Matrix3d> svd(t);
        const Eigen::Vector3d a = svd.singularValues();
        const double f = 0.5 * (1.0 + a.sum() / 3.0);
        const double d = std::sqrt(std::pow(a(0) - a(1), 2) + std::pow(a(0) - a(2), 2) +
                                   std::pow(a(1) - a(2), 2)) /
                         (3.0 * std::sqrt(10.0));
        const orc::NumericMoments m = orc::optimal_moments(s);
        CHECK(m.mean_f == doctest::Approx(f).epsilon(1e-9));
        CHECK(std::abs(m.delta - d) < 1e-8);
    }
}

TEST_CASE("Monte Carlo mode is seeded and close to the quadrature") {
    auto rng = random::stream(44, 0);
    const TwoQubitState s = random::random_state(rng, 3);
    orc::QuadratureSpec q;
    q.mc_samples = 20000;
    q.seed = 9;
    const orc::NumericMoments a = orc::numeric_moments(s, q);
    const orc::NumericMoments b = orc::numeric_moments(s, q);
    const orc::NumericMoments exact = orc::numeric_moments(s);
    CHECK(a.mean_f == b.mean_f);
    CHECK(a.mean_f == doctest::Approx(exact.mean_f).epsilon(1e-2));
    q.mc_samples = 0;
    CHECK_THROWS_AS(orc::numeric_moments(s, q), RangeError);
}

TEST_CASE("pairwise summation") {
    std::vector<double> v(1 << 20, 0.1);
    CHECK(orc::pairwise_sum(v) == doctest::Approx(0.1 * (1 << 20)).epsilon(1e-15));
    CHECK(orc::pairwise_sum({}) == 0.0);
}
