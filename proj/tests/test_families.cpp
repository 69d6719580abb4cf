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
#include "uqt/families.hpp"
#include "uqt/hermitian_eig.hpp"

using namespace uqt;
namespace fam = uqt::families;

namespace {

const double kSqrt5 = std::sqrt(5.0);

TeleportProfile on_pure(double c, const QubitChannel &ch) {
    return profile(apply_to_bob(pure_state(pure_state_a_for_concurrence(c)), ch));
}

TeleportProfile on_bell(const QubitChannel &ch) { return profile(apply_to_bob(bell_state(1), ch)); }

} // namespace

TEST_CASE("catalog lookups and parameter checks") {
    CHECK(fam::catalog().size() >= 27);
    CHECK_THROWS_AS(fam::make({"no_such_family", {}}), RangeError);
    CHECK_THROWS_AS(fam::make({"werner", {{"q", 0.5}}}), RangeError);
    CHECK_THROWS_AS(fam::make({"werner", {{"p", 1.5}}}), RangeError);
    CHECK_THROWS_AS(fam::make({"werner", {}}), RangeError);
    try {
        fam::make({"gadc", {{"gamma", 2.0}, {"N", 0.5}}});
        FAIL("expected failure");
    } catch (const RangeError &e) {
        CHECK(std::string(e.what()).find("gamma") != std::string::npos);
    }
    CHECK(fam::make({"werner", {{"p", 0.7}}}).name() == "werner");
    CHECK(fam::info("lambda_star_nu").matched_param == "p1");
    CHECK(fam::is_noise_family("adc_m"));
    CHECK_FALSE(fam::is_noise_family("werner"));
    CHECK(fam::format_range({"x", 0.0, 1.0, true, false, ""}) == "(0, 1]");
}

TEST_CASE("generic ranks and unitality match the catalog") {
    CHECK(report(fam::werner(0.7)).choi_rank == 4);
    CHECK(report(fam::dephasing(0.7)).choi_rank == 2);
    CHECK(report(fam::example_rank4()).choi_rank == 4);
    CHECK(report(fam::example_rank3(0.5)).choi_rank == 3);
    CHECK(report(fam::gadc(0.5, 0.7)).choi_rank == 4);
    CHECK_FALSE(report(fam::gadc(0.5, 0.7)).unital);
    CHECK(report(fam::lambda_u2(0.6)).choi_rank == 2);
    CHECK(report(fam::lambda_u2(0.6)).unital);
}

TEST_CASE("pure state through the identity") {
    for (double c : {0.2, 0.6, 0.9}) {
        const TeleportProfile p = on_pure(c, identity_channel());
        REQUIRE(p.formula_valid);
        CHECK(*p.f_max == doctest::Approx((2.0 + c) / 3.0).epsilon(1e-13));
        CHECK(*p.delta == doctest::Approx((1.0 - c) / (3.0 * kSqrt5)).epsilon(1e-12));
    }
}

TEST_CASE("unital channel tuned to a pure input") {
    // Window (1 + 2c)/(6c) < p0 <= 1/(2 - c).
    CHECK_THROWS_AS(fam::uqt_unital_for_pure(0.8, 0.9), RangeError);
    CHECK_THROWS_AS(fam::uqt_unital_for_pure(0.45, 0.6), RangeError);
    const QubitChannel ch = fam::uqt_unital_for_pure(0.8, 0.8);
    const double p1 = (1.0 + (1.0 - 1.6) * 0.8) / (4.0 + 1.6);
    CHECK(ch.params().at("c") == 0.8);
    const TeleportProfile p = on_pure(0.8, ch);
    CHECK(p.uqt);
    // All |t_ii| equal (4 p0 - 1) C / (2 + C).
    const double t = (4.0 * 0.8 - 1.0) * 0.8 / 2.8;
    CHECK(p.spectrum.abs_t(0) == doctest::Approx(t).epsilon(1e-12));
    CHECK(*p.f_max == doctest::Approx(0.5 * (1.0 + t)).epsilon(1e-12));
    CHECK(p1 > 0.0);
}

TEST_CASE("lambda_u4: CP boundary and fidelity on the matched state") {
    CHECK_THROWS_AS(fam::lambda_u4(0.4), RangeError);
    const auto w = fam::lambda_u4_weights(0.4);
    Eigen::SelfAdjointEigenSolver<Mat4> es(fam::pauli_map_choi(w));
    CHECK(es.eigenvalues().minCoeff() == doctest::Approx(-1.0 / 36.0).epsilon(1e-12));
    for (double c : {0.6, 0.8}) {
        const TeleportProfile p = on_pure(c, fam::lambda_u4(c));
        REQUIRE(p.formula_valid);
        CHECK(*p.f_max == doctest::Approx((3.0 + 4.0 * c) / (6.0 + 3.0 * c)).epsilon(1e-12));
        CHECK(*p.delta < 1e-12);
    }
}

TEST_CASE("non-unital UQT family: closed-form eigenvalues and Kraus forms") {
    const Eigen::Vector3d s(0.1, -0.2, 0.15);
    const double t = 0.6;
    Eigen::SelfAdjointEigenSolver<Mat4> es(fam::uqt_choi_matrix(s, t));
    const Eigen::Vector4d q = fam::uqt_choi_eigenvalues(s, t);
    CHECK((es.eigenvalues().reverse() - q).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((fam::uqt_choi_matrix(s, t) - choi_matrix(fam::uqt_nonunital_rank4(s, t).kraus())).norm() <
          1e-12);
    CHECK((choi_matrix(fam::rank4_closed_form(s, t)) - fam::uqt_choi_matrix(s, t)).norm() < 1e-12);

    const double th = 1.1, ph = 0.4, t3 = 0.5;
    const Mat4 c3 = choi_matrix(fam::uqt_nonunital_rank3(th, ph, t3).kraus());
    CHECK((choi_matrix(fam::rank3_closed_form(th, ph, t3)) - c3).norm() < 1e-12);
    CHECK(fam::rank3_bloch(th, ph, t3).norm() == doctest::Approx(1.0 - t3));
    CHECK(numeric_rank(c3) == 3);

    CHECK_THROWS_AS(fam::uqt_nonunital_rank4(Eigen::Vector3d(0.5, 0, 0), 0.6), RangeError);
    CHECK_THROWS_AS(fam::uqt_nonunital_rank4(s, 0.3), RangeError);
}

TEST_CASE("named examples on Bell") {
    CHECK(*on_bell(fam::example_rank4()).f_max == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(*on_bell(fam::example_rank3_universal_only()).f_max == doctest::Approx(0.55).epsilon(1e-12));
    CHECK(*on_bell(fam::example_rank3(0.6)).f_max == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(on_bell(fam::example_rank4()).uqt);
    CHECK_FALSE(on_bell(fam::example_rank3_universal_only()).useful);
}

TEST_CASE("GADC on Bell") {
    const double g = 0.5;
    const TeleportProfile p = on_bell(fam::gadc(g, 0.7));
    REQUIRE(p.formula_valid);
    const double r = std::sqrt(1.0 - g);
    CHECK(*p.f_max == doctest::Approx(0.5 + (2.0 * r + (1.0 - g)) / 6.0).epsilon(1e-12));
    CHECK(*p.delta == doctest::Approx(r * (1.0 - r) / (3.0 * kSqrt5)).epsilon(1e-12));
    CHECK(*p.f_max == doctest::Approx(0.81904).epsilon(1e-5));
    CHECK(*p.delta == doctest::Approx(0.03087).epsilon(1e-3));
}

TEST_CASE("lambda_tilde_nu and lambda_star_nu on the matched state") {
    const double c = 0.7;
    const double p2 = 0.5 * fam::lambda_tilde_p2_max(c);
    const TeleportProfile p = on_pure(c, fam::lambda_tilde_nu(c, p2));
    REQUIRE(p.formula_valid);
    CHECK(*p.f_max == doctest::Approx(0.5 * (1.0 + p2 * c)).epsilon(1e-12));
    CHECK(*p.delta < 1e-12);
    CHECK_THROWS_AS(fam::lambda_tilde_nu(c, 1.01 * fam::lambda_tilde_p2_max(c)), RangeError);

    const double w = std::sqrt(1.0 - c * c);
    const double f_star = (3.0 - w + std::sqrt(3.0 * c * c - 2.0 + 2.0 * w)) / 4.0;
    const TeleportProfile q = on_pure(c, fam::lambda_star_nu(c));
    REQUIRE(q.formula_valid);
    CHECK(*q.f_max == doctest::Approx(f_star).epsilon(1e-12));
    CHECK(*q.delta < 1e-12);
    CHECK(q.uqt);
}

TEST_CASE("time laws of the noise rows") {
    const auto p_of = [](const std::string &id, const ParamMap &m) {
        return fam::make({id, m}).params().at("p");
    };
    CHECK(p_of("adc_m", {{"gamma", 0.8}, {"t", 1.5}}) == doctest::Approx(1.0 - std::exp(-1.2)));
    CHECK(p_of("pln_m", {{"G", 0.5}, {"t", 2.0}}) == doctest::Approx(std::exp(-1.0)));
    CHECK(p_of("oun_m", {{"G", 0.6}, {"t", 3.0}}) == doctest::Approx(std::exp(-0.9)));
    CHECK(p_of("adc_nm", {{"R", 0.5}, {"gamma", 1.0}, {"omega0", 1.0}, {"g", 1.0}, {"t", 0.0}}) == 0.0);
    CHECK(p_of("pln_nm", {{"G", 0.5}, {"g", 1.0}, {"t", 0.0}}) == doctest::Approx(1.0));
    CHECK(p_of("rtn_nm", {{"g", 0.5}, {"omega", 2.0}, {"t", 0.0}}) == doctest::Approx(1.0));
    CHECK(p_of("oun_nm", {{"p", 0.3}}) == 0.3);
    CHECK_THROWS_AS(fam::make({"oun_nm", {{"p", 0.3}, {"t", 1.0}}}), RangeError);
    CHECK_THROWS_AS(fam::make({"pln_m", {{"G", -1.0}, {"t", 1.0}}}), RangeError);
}

TEST_CASE("non-Markovian depolarizing and dephasing rows") {
    CHECK_THROWS_AS(fam::depolarizing_nm(1.0, 0.4), RangeError); // p > 1/(3 alpha)
    const TeleportProfile dep = on_bell(fam::depolarizing_nm(0.5, 0.2));
    CHECK(*dep.f_max == doctest::Approx(1.0 - 2.0 * 0.2 * (1.0 + 1.5 * 0.8) / 3.0).epsilon(1e-12));
    CHECK(*dep.delta < 1e-12);
    // w3 = p (1 + alpha (1 - p)) = 1/2 at the boundary.
    const double p = 0.4, a = (0.5 / p - 1.0) / (1.0 - p);
    const TeleportProfile deph = on_bell(fam::dephasing_nm(a, p));
    CHECK(*deph.delta == doctest::Approx(1.0 / (3.0 * kSqrt5)).epsilon(1e-10));
    CHECK(*deph.f_max == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("Markovian dephasing row matches the table law") {
    for (double p : {0.2, 0.7}) {
        const TeleportProfile r = on_bell(fam::dephasing_m(p));
        CHECK(*r.f_max == doctest::Approx((2.0 + std::abs(1.0 - 2.0 * p)) / 3.0).epsilon(1e-12));
        CHECK(*r.delta ==
              doctest::Approx((1.0 - std::abs(1.0 - 2.0 * p)) / (3.0 * kSqrt5)).epsilon(1e-12));
    }
    const TeleportProfile u = on_bell(fam::unruh(0.5));
    const double c = std::cos(0.5);
    CHECK(*u.f_max == doctest::Approx(0.5 + (2.0 * c + c * c) / 6.0).epsilon(1e-12));
}
