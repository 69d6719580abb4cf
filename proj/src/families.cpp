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

#include "uqt/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "family_detail.hpp"

namespace uqt::families {

using detail::kInf;
using detail::require;

namespace {

const cplx I(0.0, 1.0);

Mat2 mat2(cplx a, cplx b, cplx c, cplx d) {
    Mat2 m;
    m << a, b, c, d;
    return m;
}

} // namespace

std::string format_range(const ParamRange &r) {
    std::string out = r.lo_open ? "(" : "[";
    out += detail::num(r.lo) + ", ";
    out += std::isinf(r.hi) ? std::string("inf") : detail::num(r.hi);
    out += r.hi_open ? ")" : "]";
    return out;
}

// -- Pauli-type and unital families -----------------------------------------

QubitChannel pauli_mixture(double p0, double p1, double p2, double p3) {
    const std::array<double, 4> p{p0, p1, p2, p3};
    for (int i = 0; i < 4; ++i) {
        require("pauli_mixture", "p" + std::to_string(i), p[static_cast<std::size_t>(i)], 0.0,
                1.0, false, false);
    }
    const double sum = p0 + p1 + p2 + p3;
    if (std::abs(sum - 1.0) > 1e-12) {
        throw RangeError("pauli_mixture: probabilities sum to " + detail::num(sum) +
                         ", expected 1");
    }
    KrausList k;
    for (int i = 0; i < 4; ++i) k.push_back(std::sqrt(p[static_cast<std::size_t>(i)]) * pauli(i));
    return validate(std::move(k), "pauli_mixture", {{"p0", p0}, {"p1", p1}, {"p2", p2}, {"p3", p3}});
}

QubitChannel werner(double p) {
    require("werner", "p", p, 0.0, 1.0, false, false);
    const double w = (1.0 - p) / 3.0;
    KrausList k{std::sqrt(p) * pauli(0)};
    for (int i = 1; i <= 3; ++i) k.push_back(std::sqrt(w) * pauli(i));
    return validate(std::move(k), "werner", {{"p", p}});
}

QubitChannel dephasing(double p) {
    require("dephasing", "p", p, 0.0, 1.0, false, false);
    return validate({std::sqrt(p) * pauli(0), std::sqrt(1.0 - p) * pauli(3)}, "dephasing",
                    {{"p", p}});
}

QubitChannel uqt_unital_for_pure(double c, double p0) {
    require("uqt_unital_for_pure", "c", c, 0.5, 1.0, true, true);
    require("uqt_unital_for_pure", "p0", p0, (1.0 + 2.0 * c) / (6.0 * c), 1.0 / (2.0 - c), true,
            false);
    const double p1 = (1.0 + (1.0 - 2.0 * p0) * c) / (4.0 + 2.0 * c);
    const double p3 = std::max(0.0, 1.0 - p0 - 2.0 * p1);
    KrausList k{std::sqrt(p0) * pauli(0), std::sqrt(p1) * pauli(1), std::sqrt(p1) * pauli(2),
                std::sqrt(p3) * pauli(3)};
    return validate(std::move(k), "uqt_unital_for_pure", {{"c", c}, {"p0", p0}});
}

std::array<double, 4> lambda_u4_weights(double p) {
    const double w = (3.0 - p) / (6.0 * (2.0 + p));
    return {2.0 / 3.0, w, w, (2.0 * p - 1.0) / (3.0 * (2.0 + p))};
}

QubitChannel lambda_u4(double p) {
    require("lambda_u4", "p", p, 0.5, 1.0, false, true);
    const auto w = lambda_u4_weights(p);
    KrausList k;
    for (int i = 0; i < 4; ++i) k.push_back(std::sqrt(w[static_cast<std::size_t>(i)]) * pauli(i));
    return validate(std::move(k), "lambda_u4", {{"p", p}});
}

QubitChannel lambda_u2(double p) {
    require("lambda_u2", "p", p, 0.0, 1.0, true, true);
    return validate({std::sqrt(p) * pauli(0), std::sqrt(1.0 - p) * pauli(3)}, "lambda_u2",
                    {{"p", p}});
}

Mat4 pauli_map_choi(const std::array<double, 4> &w) {
    Mat4 out = Mat4::Zero();
    for (int i = 0; i < 4; ++i) {
        const Vec4 b = bell_vector(i + 1);
        out += w[static_cast<std::size_t>(i)] * b * b.adjoint();
    }
    return out;
}

// -- Non-unital families whose Choi state keeps |t_ii| = t ------------------

Mat4 uqt_choi_matrix(const Eigen::Vector3d &s, double t) {
    const cplx sm(s(0), -s(1)), sp(s(0), s(1));
    Mat4 m;
    m << 1.0 + s(2) - t, sm, 0.0, 0.0,
         sp, 1.0 - s(2) + t, -2.0 * t, 0.0,
         0.0, -2.0 * t, 1.0 + s(2) + t, sm,
         0.0, 0.0, sp, 1.0 - s(2) - t;
    return m / 4.0;
}

Eigen::Vector4d uqt_choi_eigenvalues(const Eigen::Vector3d &s, double t) {
    const double n = s.norm();
    const double r = std::sqrt(n * n + 4.0 * t * t);
    return Eigen::Vector4d(1.0 + t + r, 1.0 + n - t, 1.0 + t - r, 1.0 - n - t) / 4.0;
}

QubitChannel uqt_nonunital_rank4(const Eigen::Vector3d &s, double t) {
    require("uqt_nonunital_rank4", "t", t, 1.0 / 3.0, 1.0, true, true);
    require("uqt_nonunital_rank4", "|s|", s.norm(), 0.0, 1.0 - t, true, true);
    return channel_from_choi(uqt_choi_matrix(s, t), "uqt_nonunital_rank4",
                             {{"s1", s(0)}, {"s2", s(1)}, {"s3", s(2)}, {"t", t}});
}

Eigen::Vector3d rank3_bloch(double theta, double phi, double t) {
    return (1.0 - t) * Eigen::Vector3d(std::sin(theta) * std::cos(phi),
                                       std::sin(theta) * std::sin(phi), std::cos(theta));
}

QubitChannel uqt_nonunital_rank3(double theta, double phi, double t) {
    require("uqt_nonunital_rank3", "t", t, 1.0 / 3.0, 1.0, true, true);
    require("uqt_nonunital_rank3", "theta", theta, 0.0, M_PI, false, false);
    require("uqt_nonunital_rank3", "phi", phi, 0.0, 2.0 * M_PI, false, false);
    return channel_from_choi(uqt_choi_matrix(rank3_bloch(theta, phi, t), t),
                             "uqt_nonunital_rank3", {{"theta", theta}, {"phi", phi}, {"t", t}});
}

KrausList rank4_closed_form(const Eigen::Vector3d &s, double t) {
    const double s1 = s(0), s2 = s(1), s3 = s(2);
    const double n = s.norm(), n2 = n * n;
    const double r = std::sqrt(n2 + 4.0 * t * t);
    const double den = n2 - s3 * s3 + 4.0 * s3 * t;
    const double k = 2.0 * std::sqrt(2.0);
    const double x0 = (2.0 * t - s3 + r) / k * std::sqrt((1.0 + t + r) / (n2 + 2.0 * t * (2.0 * t + r)));
    const double x1 = std::sqrt((n2 - s3 * s3) * (1.0 + n - t)) / (k * n);
    const double x2 = (s3 - 2.0 * t + r) / k * std::sqrt((1.0 + t - r) / (n2 + 2.0 * t * (2.0 * t - r)));
    const double x3 = std::sqrt((n2 - s3 * s3) * (1.0 - n - t)) / (k * n);
    const cplx a(s2, s1);   // i s1 + s2
    const cplx b(-s2, s1);  // i s1 - s2
    const cplx sp(s1, s2), sm(s1, -s2);
    return {
        x0 * mat2(a / (s3 - 2.0 * t - r), I * (n2 + s3 * (s3 + 2.0 * r)) / den, -I,
                  b / (-s3 + 2.0 * t + r)),
        x1 * mat2(-I * (n + s3) / sp, -I, -I, I * (s3 - n) / sm),
        x2 * mat2(a / (s3 - 2.0 * t + r), I * (n2 + s3 * (s3 - 2.0 * r)) / den, -I,
                  -b / (s3 - 2.0 * t + r)),
        x3 * mat2(a / (n + s3), -I, -I, I * (n + s3) / sm),
    };
}

KrausList rank3_closed_form(double theta, double phi, double t) {
    const double u = 1.0 - t;
    const double ct = std::cos(theta), st = std::sin(theta);
    const double r = std::sqrt(u * u + 4.0 * t * t);
    const double den = u * u * st * st + 4.0 * t * u * ct;
    const double k = 2.0 * std::sqrt(2.0);
    const cplx em = std::polar(1.0, -phi), ep = std::polar(1.0, phi);
    const double y0 = (2.0 * t - u * ct + r) / k * std::sqrt((1.0 + t + r) / (u * u + 2.0 * t * (2.0 * t + r)));
    const double y1 = st * std::sqrt(u) / 2.0;
    const double y2 = (u * ct - 2.0 * t + r) / k * std::sqrt((1.0 + t - r) / (u * u + 2.0 * t * (2.0 * t - r)));
    return {
        y0 * mat2(I * u * st * em / (u * ct - 2.0 * t - r),
                  I * (u * u * (1.0 + ct * ct) + 2.0 * u * ct * r) / den, -I,
                  I * u * st * ep / (-u * ct + 2.0 * t + r)),
        y1 * mat2(-I * (1.0 + ct) / (st * ep), -I, -I, -I * (1.0 - ct) / (st * em)),
        y2 * mat2(I * u * st * em / (u * ct - 2.0 * t + r),
                  I * (u * u * (1.0 + ct * ct) - 2.0 * u * ct * r) / den, -I,
                  -I * u * st * ep / (u * ct - 2.0 * t + r)),
    };
}

// -- Named examples ---------------------------------------------------------

QubitChannel example_rank3(double p) {
    require("example_rank3", "p", p, 0.0, 1.0, true, true);
    const double a = std::sqrt(1.0 - p);
    return validate({mat2(a, 0, 0, 0), mat2(0, a, 0, 0), std::sqrt(p) * pauli(0)},
                    "example_rank3", {{"p", p}});
}

QubitChannel example_rank3_universal_only() {
    const double q = std::sqrt(5.0 / 17.0);
    const double a = std::sqrt(5.0 + 7.0 * q), b = std::sqrt(65.0 + 107.0 * q);
    const double c = std::sqrt(5.0 - 7.0 * q), d = std::sqrt(65.0 - 107.0 * q);
    const cplx e = -3.0 * I / (2.0 * std::sqrt(10.0));
    return validate({mat2(-3.0 * I * a / 20.0, I * b / 20.0, -I * b / 20.0, 3.0 * I * a / 20.0),
                     mat2(e, e, e, e),
                     mat2(3.0 * I * c / 20.0, I * d / 20.0, -I * d / 20.0, -3.0 * I * c / 20.0)},
                    "example_rank3_universal_only");
}

QubitChannel example_rank4() {
    const double r17 = std::sqrt(17.0);
    const double c0 = std::sqrt((6.0 + r17) / (17.0 - r17));
    const double c2 = std::sqrt((6.0 - r17) / (17.0 + r17));
    const double k = 2.0 * std::sqrt(2.0);
    return validate({c0 * mat2(0, 1, (1.0 - r17) / 4.0, 0), mat2(std::sqrt(3.0) / k, 0, 0, 0),
                     c2 * mat2(0, 1, (1.0 + r17) / 4.0, 0), mat2(0, 0, 0, 1.0 / k)},
                    "example_rank4");
}

QubitChannel gadc(double gamma, double n) {
    require("gadc", "gamma", gamma, 0.0, 1.0, false, false);
    require("gadc", "N", n, 0.0, 1.0, false, false);
    const double a = std::sqrt(1.0 - n), b = std::sqrt(n);
    const double g = std::sqrt(gamma), h = std::sqrt(1.0 - gamma);
    return validate({a * mat2(1, 0, 0, h), a * mat2(0, g, 0, 0), b * mat2(h, 0, 0, 1),
                     b * mat2(0, 0, g, 0)},
                    "gadc", {{"gamma", gamma}, {"N", n}});
}

double lambda_tilde_p2_max(double p1) {
    return (1.0 + p1) / (1.0 + p1 + std::sqrt(1.0 - p1 * p1));
}

QubitChannel lambda_tilde_nu(double p1, double p2) {
    require("lambda_tilde_nu", "p1", p1, 0.0, 1.0, true, true);
    require("lambda_tilde_nu", "p2", p2, 0.0, lambda_tilde_p2_max(p1), true, true);
    const double ratio = std::sqrt(1.0 - p1) / std::sqrt(1.0 + p1);
    const double root = std::sqrt(1.0 + p1) * std::sqrt(5.0 + 3.0 * p1);
    const double m = std::sqrt(1.0 - p1) * std::sqrt(5.0 + 3.0 * p1);
    const double base = 1.0 + p1 + p2 + p1 * p2;
    const double c0 = std::sqrt(std::max(0.0, 1.0 - p2 - p2 * ratio)) / std::sqrt(2.0);
    const double c1 = std::sqrt(1.0 - p2 + p2 * ratio) / std::sqrt(2.0);
    const double c2 = std::sqrt(std::max(0.0, base - p2 * root) / (5.0 + 3.0 * p1 + m));
    const double c3 = std::sqrt((base + p2 * root) / (5.0 + 3.0 * p1 - m));
    const double lo2 = (std::sqrt(1.0 - p1) + std::sqrt(5.0 + 3.0 * p1)) / (2.0 * std::sqrt(1.0 + p1));
    const double lo3 = (std::sqrt(1.0 - p1) - std::sqrt(5.0 + 3.0 * p1)) / (2.0 * std::sqrt(1.0 + p1));
    return validate({c0 * mat2(0, 0, 0, 1), c1 * mat2(1, 0, 0, 0), c2 * mat2(0, 1, lo2, 0),
                     c3 * mat2(0, 1, lo3, 0)},
                    "lambda_tilde_nu", {{"p1", p1}, {"p2", p2}});
}

double lambda_star_gamma(double p1) {
    const double w = std::sqrt(1.0 - p1 * p1);
    return (1.0 + w - std::sqrt(3.0 * p1 * p1 - 2.0 + 2.0 * w)) / (2.0 + 2.0 * w);
}

QubitChannel lambda_star_nu(double p1) {
    require("lambda_star_nu", "p1", p1, 0.0, 1.0, true, true);
    const double g = lambda_star_gamma(p1);
    return validate({mat2(std::sqrt(1.0 - g), 0, 0, 1), mat2(0, 0, std::sqrt(g), 0)},
                    "lambda_star_nu", {{"p1", p1}, {"gamma", g}});
}

// -- Catalog ----------------------------------------------------------------

namespace {

using Builder = std::function<QubitChannel(const ParamMap &)>;

struct Entry {
    FamilyInfo info;
    Builder build;
    bool noise = false;
};

ParamRange closed01(const std::string &n, std::string note = "") {
    return {n, 0.0, 1.0, false, false, std::move(note)};
}
ParamRange open01(const std::string &n, std::string note = "") {
    return {n, 0.0, 1.0, true, true, std::move(note)};
}
ParamRange positive(const std::string &n, std::string note = "") {
    return {n, 0.0, kInf, true, true, std::move(note)};
}
ParamRange time_range() { return {"t", 0.0, kInf, false, true, "time"}; }
ParamRange p_direct() {
    return {"p", 0.0, 1.0, false, false, "alternative to t and the constants"};
}

double get(const std::string &family, const ParamMap &m, const std::string &name) {
    const auto it = m.find(name);
    if (it == m.end()) throw RangeError(family + ": missing parameter " + name);
    return it->second;
}

/// Resolves p for a time-parameterized row: either p directly or p(t).
double time_law(const std::string &family, const ParamMap &m,
                const std::vector<std::string> &constants,
                const std::function<double(const std::vector<double> &)> &law) {
    if (m.count("p")) {
        if (m.count("t")) throw RangeError(family + ": give either p or t, not both");
        const double p = m.at("p");
        require(family, p_direct(), p);
        return p;
    }
    std::vector<double> args;
    for (const auto &c : constants) {
        const double v = get(family, m, c);
        require(family, positive(c), v);
        args.push_back(v);
    }
    const double t = get(family, m, "t");
    require(family, time_range(), t);
    args.push_back(t);
    const double p = law(args);
    if (!(p >= -1e-12 && p <= 1.0 + 1e-12)) {
        throw RangeError(family + ": p(t) = " + detail::num(p) +
                         " leaves [0, 1]; noise constants are outside the valid regime");
    }
    return std::clamp(p, 0.0, 1.0);
}

QubitChannel renamed(QubitChannel ch, const std::string &id, const ParamMap &m, double p) {
    ParamMap params = m;
    params["p"] = p;
    return validate(ch.kraus(), id, std::move(params));
}

const std::vector<Entry> &entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> e;
        e.push_back({{"identity", {}, "identity map", true, 1, ""},
                     [](const ParamMap &) { return identity_channel(); }});
        e.push_back({{"pauli_mixture",
                      {closed01("p0"), closed01("p1"), closed01("p2"), closed01("p3", "sum = 1")},
                      "convex mixture of Pauli channels", true, 4, ""},
                     [](const ParamMap &m) {
                         const std::string f = "pauli_mixture";
                         return pauli_mixture(get(f, m, "p0"), get(f, m, "p1"), get(f, m, "p2"),
                                              get(f, m, "p3"));
                     }});
        e.push_back({{"werner", {closed01("p")}, "Werner-producing Pauli channel", true, 4, ""},
                     [](const ParamMap &m) { return werner(get("werner", m, "p")); }});
        e.push_back({{"dephasing", {closed01("p")}, "dephasing, K0 = sqrt(p) I", true, 2, ""},
                     [](const ParamMap &m) { return dephasing(get("dephasing", m, "p")); }});
        e.push_back({{"uqt_unital_for_pure",
                      {{"c", 0.5, 1.0, true, true, "target concurrence"},
                       {"p0", 0.0, 1.0, true, false, "(1+2c)/(6c) < p0 <= 1/(2-c)"}},
                      "unital channel making a matched pure state UQT", true, 4, "c"},
                     [](const ParamMap &m) {
                         const std::string f = "uqt_unital_for_pure";
                         return uqt_unital_for_pure(get(f, m, "c"), get(f, m, "p0"));
                     }});
        e.push_back({{"uqt_nonunital_rank4",
                      {{"s1", -1.0, 1.0, true, true, ""}, {"s2", -1.0, 1.0, true, true, ""},
                       {"s3", -1.0, 1.0, true, true, "0 < |s| < 1 - t"},
                       {"t", 1.0 / 3.0, 1.0, true, true, ""}},
                      "non-unital, rank-four Choi state with |t_ii| = t", false, 4, ""},
                     [](const ParamMap &m) {
                         const std::string f = "uqt_nonunital_rank4";
                         return uqt_nonunital_rank4(
                             Eigen::Vector3d(get(f, m, "s1"), get(f, m, "s2"), get(f, m, "s3")),
                             get(f, m, "t"));
                     }});
        e.push_back({{"uqt_nonunital_rank3",
                      {{"theta", 0.0, M_PI, false, false, ""},
                       {"phi", 0.0, 2.0 * M_PI, false, false, ""},
                       {"t", 1.0 / 3.0, 1.0, true, true, ""}},
                      "non-unital, rank-three Choi state with |t_ii| = t", false, 3, ""},
                     [](const ParamMap &m) {
                         const std::string f = "uqt_nonunital_rank3";
                         return uqt_nonunital_rank3(get(f, m, "theta"), get(f, m, "phi"),
                                                    get(f, m, "t"));
                     }});
        e.push_back({{"lambda_u4", {{"p", 0.5, 1.0, false, true, "CP only for p >= 1/2"}},
                      "unital rank-four example for pure inputs", true, 4, "p"},
                     [](const ParamMap &m) { return lambda_u4(get("lambda_u4", m, "p")); }});
        e.push_back({{"lambda_u2", {open01("p")}, "unital rank-two example for pure inputs",
                      true, 2, ""},
                     [](const ParamMap &m) { return lambda_u2(get("lambda_u2", m, "p")); }});

        // Named examples.
        e.push_back({{"example_rank3", {open01("p")}, "three-Kraus non-unital example", false, 3, ""},
                     [](const ParamMap &m) { return example_rank3(get("example_rank3", m, "p")); },
                     true});
        e.push_back({{"example_rank3_universal_only", {},
                      "rank-three example, universal but not useful", false, 3, ""},
                     [](const ParamMap &) { return example_rank3_universal_only(); }, true});
        e.push_back({{"example_rank4", {}, "rank-four non-unital UQT example", false, 4, ""},
                     [](const ParamMap &) { return example_rank4(); }, true});
        e.push_back({{"gadc", {closed01("gamma"), closed01("N")},
                      "generalized amplitude damping", false, 4, ""},
                     [](const ParamMap &m) {
                         return gadc(get("gadc", m, "gamma"), get("gadc", m, "N"));
                     },
                     true});
        e.push_back({{"lambda_tilde_nu",
                      {open01("p1", "matched concurrence"),
                       {"p2", 0.0, 1.0, true, true, "0 < p2 < (1+p1)/(1+p1+sqrt(1-p1^2))"},
                       {"p2_frac", 0.0, 1.0, true, true, "alternative: p2 = p2_frac * p2max"}},
                      "four-Kraus non-unital family for pure inputs", false, 4, "p1"},
                     [](const ParamMap &m) {
                         const std::string f = "lambda_tilde_nu";
                         const double p1 = get(f, m, "p1");
                         if (m.count("p2_frac")) {
                             if (m.count("p2")) throw RangeError(f + ": give p2 or p2_frac");
                             const double frac = m.at("p2_frac");
                             require(f, "p2_frac", frac, 0.0, 1.0, true, true);
                             require(f, "p1", p1, 0.0, 1.0, true, true);
                             QubitChannel ch = lambda_tilde_nu(p1, frac * lambda_tilde_p2_max(p1));
                             ParamMap params = ch.params();
                             params["p2_frac"] = frac;
                             return validate(ch.kraus(), f, params);
                         }
                         return lambda_tilde_nu(p1, get(f, m, "p2"));
                     },
                     true});
        e.push_back({{"lambda_star_nu", {open01("p1", "matched concurrence")},
                      "amplitude damping at N = 1 with gamma(p1)", false, 2, "p1"},
                     [](const ParamMap &m) {
                         return lambda_star_nu(get("lambda_star_nu", m, "p1"));
                     },
                     true});

        // Physical noise rows.
        e.push_back({{"depolarizing_m", {closed01("p")}, "Depolarizing (Markovian)", true, 4, ""},
                     [](const ParamMap &m) { return depolarizing_m(get("depolarizing_m", m, "p")); },
                     true});
        e.push_back({{"dephasing_m", {closed01("p")}, "Dephasing (Markovian)", true, 2, ""},
                     [](const ParamMap &m) { return dephasing_m(get("dephasing_m", m, "p")); },
                     true});
        e.push_back({{"adc_m", {positive("gamma"), time_range(), p_direct()}, "ADC (Markovian)",
                      false, 2, ""},
                     [](const ParamMap &m) {
                         const double p = time_law("adc_m", m, {"gamma"}, [](const auto &a) {
                             return p_adc_m(a[0], a[1]);
                         });
                         return renamed(amplitude_damping(p), "adc_m", m, p);
                     },
                     true});
        e.push_back({{"pln_m", {positive("G"), time_range(), p_direct()}, "PLN (Markovian)",
                      true, 2, ""},
                     [](const ParamMap &m) {
                         const double p = time_law("pln_m", m, {"G"}, [](const auto &a) {
                             return p_pln_m(a[0], a[1]);
                         });
                         return renamed(dephasing_m(p), "pln_m", m, p);
                     },
                     true});
        e.push_back({{"oun_m", {positive("G"), time_range(), p_direct()}, "OUN (Markovian)",
                      true, 2, ""},
                     [](const ParamMap &m) {
                         const double p = time_law("oun_m", m, {"G"}, [](const auto &a) {
                             return p_oun_m(a[0], a[1]);
                         });
                         return renamed(dephasing_m(p), "oun_m", m, p);
                     },
                     true});
        e.push_back({{"unruh", {{"r", 0.0, M_PI / 4.0, true, false, ""}}, "Unruh (Markovian)",
                      false, 2, ""},
                     [](const ParamMap &m) { return unruh(get("unruh", m, "r")); }, true});
        e.push_back({{"depolarizing_nm",
                      {{"alpha", 0.0, 1.0, true, false, ""},
                       {"p", 0.0, 0.5, false, false, "also p <= 1/(3 alpha)"}},
                      "Depolarizing (Non-Markovian)", true, 4, ""},
                     [](const ParamMap &m) {
                         return depolarizing_nm(get("depolarizing_nm", m, "alpha"),
                                                get("depolarizing_nm", m, "p"));
                     },
                     true});
        e.push_back({{"dephasing_nm",
                      {{"alpha", 0.0, 1.0, true, false, ""}, {"p", 0.0, 0.5, false, false, ""}},
                      "Dephasing (Non-Markovian)", true, 2, ""},
                     [](const ParamMap &m) {
                         return dephasing_nm(get("dephasing_nm", m, "alpha"),
                                             get("dephasing_nm", m, "p"));
                     },
                     true});
        e.push_back({{"adc_nm",
                      {positive("R"), positive("gamma"), positive("omega0"), positive("g"),
                       time_range(), p_direct()},
                      "ADC (Non-Markovian)", false, 2, ""},
                     [](const ParamMap &m) {
                         const double p =
                             time_law("adc_nm", m, {"R", "gamma", "omega0", "g"},
                                      [](const auto &a) {
                                          return p_adc_nm(a[0], a[1], a[2], a[3], a[4]);
                                      });
                         return renamed(amplitude_damping(p), "adc_nm", m, p);
                     },
                     true});
        e.push_back({{"pln_nm", {positive("G"), positive("g"), time_range(), p_direct()},
                      "PLN (Non-Markovian)", true, 2, ""},
                     [](const ParamMap &m) {
                         const double p = time_law("pln_nm", m, {"G", "g"}, [](const auto &a) {
                             return p_pln_nm(a[0], a[1], a[2]);
                         });
                         return renamed(dephasing_m(p), "pln_nm", m, p);
                     },
                     true});
        e.push_back({{"oun_nm", {positive("G"), positive("g"), time_range(), p_direct()},
                      "OUN (Non-Markovian)", true, 2, ""},
                     [](const ParamMap &m) {
                         const double p = time_law("oun_nm", m, {"G", "g"}, [](const auto &a) {
                             return p_oun_nm(a[0], a[1], a[2]);
                         });
                         return renamed(dephasing_m(p), "oun_nm", m, p);
                     },
                     true});
        e.push_back({{"rtn_nm", {positive("g"), positive("omega"), time_range(), p_direct()},
                      "RTN (Non-Markovian)", true, 2, ""},
                     [](const ParamMap &m) {
                         const double p = time_law("rtn_nm", m, {"g", "omega"}, [](const auto &a) {
                             return p_rtn_nm(a[0], a[1], a[2]);
                         });
                         return renamed(dephasing_m(p), "rtn_nm", m, p);
                     },
                     true});
        return e;
    }();
    return table;
}

const Entry &entry(const std::string &id) {
    for (const Entry &e : entries())
        if (e.info.id == id) return e;
    throw RangeError("unknown family: " + id);
}

} // namespace

const std::vector<FamilyInfo> &catalog() {
    static const std::vector<FamilyInfo> infos = [] {
        std::vector<FamilyInfo> out;
        for (const Entry &e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const FamilyInfo &info(const std::string &id) { return entry(id).info; }

bool is_noise_family(const std::string &id) { return entry(id).noise; }

QubitChannel make(const FamilySpec &spec) {
    const Entry &e = entry(spec.family_id);
    std::set<std::string> known;
    for (const ParamRange &r : e.info.params) known.insert(r.name);
    for (const auto &[name, value] : spec.params) {
        if (!known.count(name)) {
            throw RangeError(spec.family_id + ": unknown parameter " + name);
        }
        (void)value;
    }
    return e.build(spec.params);
}

QubitChannel noise_channel(const FamilySpec &spec) {
    if (!is_noise_family(spec.family_id)) {
        throw RangeError("not a noise-model family: " + spec.family_id);
    }
    return make(spec);
}

} // namespace uqt::families
