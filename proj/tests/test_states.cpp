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

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "uqt/random.hpp"
#include "uqt/states.hpp"

using namespace uqt;

namespace {

/// Concurrence from the non-Hermitian product rho * tilde(rho).
double wootters_reference(const Mat4 &rho) {
    const Mat4 yy = tensor(pauli(2), pauli(2));
    const Mat4 r = rho * yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Mat4> es(r);
    std::array<double, 4> l;
    for (int i = 0; i < 4; ++i) l[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

Mat4 werner_rho(double p) {
    Mat4 m = Mat4::Zero();
    for (int k = 1; k <= 4; ++k) {
        const Vec4 v = bell_vector(k);
        m += (k == 1 ? p : (1.0 - p) / 3.0) * v * v.adjoint();
    }
    return m;
}

} // namespace

TEST_CASE("hs decomposition round trip") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        auto rng = random::stream(10, i);
        const TwoQubitState s = random::random_state(rng, 1 + static_cast<int>(i % 4));
        CHECK((hs_recompose(s.hs()) - s.rho()).norm() < 1e-14);
    }
}

TEST_CASE("bell correlation matrices") {
    const auto t1 = bell_state(1).hs().t;
    CHECK(t1(0, 0) == doctest::Approx(1.0));
    CHECK(t1(1, 1) == doctest::Approx(-1.0));
    CHECK(t1(2, 2) == doctest::Approx(1.0));
    const auto t3 = bell_state(3).hs().t;
    for (int k = 0; k < 3; ++k) CHECK(t3(k, k) == doctest::Approx(-1.0));
    CHECK(bell_state(1).hs().r.norm() < 1e-15);
    CHECK(bell_state(1).hs().s.norm() < 1e-15);
}

TEST_CASE("density validation") {
    Mat4 m = Mat4::Identity() / 4.0;
    m(0, 1) = 0.1;
    CHECK_THROWS_AS(TwoQubitState::from_density(m), ValidationError);
    CHECK_THROWS_AS(TwoQubitState::from_density(Mat4::Identity() / 2.0), ValidationError);
    Mat4 neg = Mat4::Zero();
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    try {
        TwoQubitState::from_density(neg);
        FAIL("expected a validation error");
    } catch (const ValidationError &e) {
        CHECK(e.kind() == ValidationError::Kind::NegativeEigenvalue);
        CHECK(e.value() == doctest::Approx(-0.5));
    }
}

TEST_CASE("pure state family") {
    CHECK_THROWS_AS(pure_state(0.4), RangeError);
    CHECK_THROWS_AS(pure_state(1.0), RangeError);
    for (double c : {0.1, 0.45, 0.6, 0.99}) {
        const double a = pure_state_a_for_concurrence(c);
        CHECK(2.0 * std::sqrt(a * (1.0 - a)) == doctest::Approx(c).epsilon(1e-13));
        CHECK(concurrence(pure_state(a)) == doctest::Approx(c).epsilon(1e-7));
    }
}

TEST_CASE("concurrence: Bell, Werner, product and random states") {
    for (int k = 1; k <= 4; ++k) CHECK(concurrence(bell_state(k)) == doctest::Approx(1.0).epsilon(1e-8));
    // Werner with weight 0.8 on Phi1: C = 2p - 1.
    const TwoQubitState w = TwoQubitState::from_density(werner_rho(0.8));
    CHECK(concurrence(w) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(concurrence(TwoQubitState::from_density(werner_rho(0.4))) == 0.0);
    CHECK(concurrence(TwoQubitState::from_density(Mat4::Identity() / 4.0)) == 0.0);
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto rng = random::stream(11, i);
        const TwoQubitState s = random::random_state(rng, 4);
        CHECK(concurrence(s) == doctest::Approx(wootters_reference(s.rho())).epsilon(1e-9));
    }
}

TEST_CASE("teleportation profile of Werner states") {
    // |t_ii| = (4p - 1)/3, det < 0, f = (1 + x)/2.
    const TeleportProfile p = profile(TwoQubitState::from_density(werner_rho(0.8)));
    REQUIRE(p.formula_valid);
    CHECK(*p.f_max == doctest::Approx(13.0 / 15.0).epsilon(1e-14));
    CHECK(*p.delta < 1e-14);
    CHECK(p.useful);
    CHECK(p.universal);
    CHECK(p.uqt);

    const TeleportProfile q = profile(TwoQubitState::from_density(werner_rho(0.5)));
    CHECK(*q.f_max == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK_FALSE(q.useful);
    CHECK_FALSE(q.uqt);
}

TEST_CASE("profile from spectrum: closed forms") {
    CorrelationSpectrum s;
    s.abs_t = Eigen::Vector3d(0.9, 0.5, 0.2);
    s.det_t = -0.09;
    const TeleportProfile p = profile_from_spectrum(s);
    REQUIRE(p.formula_valid);
    CHECK(*p.f_max == doctest::Approx(0.5 * (1.0 + 1.6 / 3.0)));
    const double d = std::sqrt(0.16 + 0.49 + 0.09) / (3.0 * std::sqrt(10.0));
    CHECK(*p.delta == doctest::Approx(d));
    CHECK_FALSE(p.universal);

    s.det_t = 0.09;
    const TeleportProfile q = profile_from_spectrum(s);
    CHECK_FALSE(q.formula_valid);
    CHECK_FALSE(q.f_max.has_value());

    s.abs_t = Eigen::Vector3d(0.9, 0.5, 0.0);
    s.det_t = 0.0;
    CHECK(profile_from_spectrum(s).formula_valid);
}

TEST_CASE("correlation spectrum of a non-symmetric T uses singular values") {
    auto rng = random::stream(12, 0);
    const TwoQubitState s = random::random_state(rng, 3);
    const CorrelationSpectrum c = correlation_spectrum(s);
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(s.hs().t);
    CHECK((c.abs_t - svd.singularValues()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(c.det_t == doctest::Approx(s.hs().t.determinant()));
    CHECK_FALSE(c.signs.has_value());
}
