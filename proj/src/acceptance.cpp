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

#include "uqt/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "uqt/explorer.hpp"
#include "uqt/families.hpp"
#include "uqt/hermitian_eig.hpp"
#include "uqt/oracle.hpp"
#include "uqt/random.hpp"

namespace uqt::acceptance {

namespace {

namespace fam = uqt::families;
namespace ex = uqt::explorer;

const double kSqrt5 = std::sqrt(5.0);

std::string g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

/// Collects the worst deviation and the first failure message.
struct Tally {
    bool ok = true;
    double worst = 0.0;
    std::string first;

    void close(double got, double want, double tol, const std::string &what) {
        const double err = std::abs(got - want);
        worst = std::max(worst, err);
        if (!(err <= tol)) fail(what + ": got " + g(got) + ", want " + g(want));
    }
    void expect(bool cond, const std::string &what) {
        if (!cond) fail(what);
    }
    void fail(const std::string &what) {
        if (ok) first = what;
        ok = false;
    }
    std::string summary(const std::string &pass_detail) const {
        return ok ? pass_detail : first;
    }
};

TeleportProfile through(const TwoQubitState &s, const QubitChannel &ch) {
    return profile(apply_to_bob(s, ch));
}

/// Best standard-protocol fidelity for any sign pattern of T.
double general_fmax(const TeleportProfile &p) {
    const Eigen::Vector3d &a = p.spectrum.abs_t;
    const double sum = p.det_t > 0.0 ? a(0) + a(1) - a(2) : a.sum();
    return 0.5 * (1.0 + sum / 3.0);
}

Outcome dephasing_law() {
    Tally t;
    const TwoQubitState bell = bell_state(1);
    for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const TwoQubitState out = apply_to_bob(bell, fam::dephasing(p));
        const TeleportProfile prof = profile(out);
        if (!prof.formula_valid) {
            t.fail("formula not applicable at p = " + g(p));
            continue;
        }
        const double f = p >= 0.5 ? (2.0 * p + 1.0) / 3.0 : (3.0 - 2.0 * p) / 3.0;
        const double d = p >= 0.5 ? 2.0 * (1.0 - p) / (3.0 * kSqrt5) : 2.0 * p / (3.0 * kSqrt5);
        t.close(*prof.f_max, f, 1e-12, "f_max at p = " + g(p));
        t.close(*prof.delta, d, 1e-12, "delta at p = " + g(p));
        const auto chk = ex::cross_check(out, prof);
        t.expect(chk.agrees, "oracle disagrees at p = " + g(p));
    }
    return {1, "dephasing on Bell", t.ok,
            t.summary("5 points, worst closed-form error " + g(t.worst) + ", oracle agrees")};
}

Outcome rank_two_no_uqt() {
    Tally t;
    const TwoQubitState bell = bell_state(1);
    int valid = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        auto rng = random::stream(101, i);
        const QubitChannel ch = random::random_channel(rng, 2);
        const TeleportProfile p = through(bell, ch);
        valid += p.formula_valid;
        t.expect(!p.uqt, "random rank-2 channel " + std::to_string(i) + " gave uqt");
    }
    return {2, "rank-2 channels never UQT", t.ok,
            t.summary("1000 channels, none UQT (" + std::to_string(valid) +
                      " with the closed forms applicable)")};
}

Outcome werner_threshold() {
    Tally t;
    ex::Scenario sc{{"werner", {}}, ex::InitialState{}};
    try {
        const auto th = ex::find_threshold(sc, "p", 0.3, 0.9, ex::Predicate::Useful, 1e-10);
        t.close(th.critical_value, 0.5, 1e-8, "usefulness threshold");
    } catch (const Error &e) {
        t.fail(e.what());
    }
    for (double p : {0.6, 0.8, 0.95}) {
        const TeleportProfile prof = through(bell_state(1), fam::werner(p));
        t.expect(prof.uqt, "werner p = " + g(p) + " not uqt");
        t.expect(prof.delta && *prof.delta <= 1e-14,
                 "werner p = " + g(p) + " delta " + (prof.delta ? g(*prof.delta) : "unset"));
    }
    return {3, "Werner threshold and UQT", t.ok,
            t.summary("threshold 0.5 within " + g(t.worst) + "; p = 0.6, 0.8, 0.95 UQT with delta 0")};
}

Outcome uqt_families() {
    Tally t;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto check = [&](const QubitChannel &ch, double tv, int rank, const Eigen::Vector4d &q,
                           const std::string &label) {
        const ChannelReport rep = report(ch);
        t.expect(!rep.unital, label + " is unital");
        t.expect(rep.choi_rank == rank, label + " Choi rank " + std::to_string(rep.choi_rank));
        const TeleportProfile p = profile(rep.choi);
        for (int k = 0; k < 3; ++k) t.close(p.spectrum.abs_t(k), tv, 1e-10, label + " |t|");
        t.expect(p.formula_valid, label + " formula not applicable");
        if (p.formula_valid) {
            t.expect(*p.delta <= 1e-12, label + " delta " + g(*p.delta));
            t.close(*p.f_max, 0.5 * (1.0 + tv), 1e-12, label + " f_max");
        }
        const Eigen::Vector4d ev = hermitian_eig(rep.choi.rho()).eigenvalues;
        for (int k = 0; k < 4; ++k) t.close(ev(k), q(k), 1e-10, label + " Choi eigenvalue");
        const int strict = rank == 4 ? 3 : 2;
        for (int k = 0; k < strict; ++k) t.expect(q(k) > q(k + 1), label + " eigenvalue order");
    };
    for (std::uint64_t i = 0; i < 500; ++i) {
        auto rng = random::stream(202, i);
        const double tv = 1.0 / 3.0 + (2.0 / 3.0) * (0.02 + 0.96 * u(rng));
        Eigen::Vector3d dir;
        std::normal_distribution<double> n01;
        do {
            dir = Eigen::Vector3d(n01(rng), n01(rng), n01(rng));
        } while (dir.norm() < 1e-3);
        const Eigen::Vector3d s = dir.normalized() * (1.0 - tv) * (0.02 + 0.96 * u(rng));
        try {
            check(fam::uqt_nonunital_rank4(s, tv), tv, 4, fam::uqt_choi_eigenvalues(s, tv),
                  "rank4 sample " + std::to_string(i));
        } catch (const Error &e) {
            t.fail("rank4 sample " + std::to_string(i) + ": " + e.what());
        }
    }
    for (std::uint64_t i = 0; i < 500; ++i) {
        auto rng = random::stream(203, i);
        const double theta = M_PI * u(rng), phi = 2.0 * M_PI * u(rng);
        const double tv = 1.0 / 3.0 + (2.0 / 3.0) * (0.02 + 0.96 * u(rng));
        try {
            check(fam::uqt_nonunital_rank3(theta, phi, tv), tv, 3,
                  fam::uqt_choi_eigenvalues(fam::rank3_bloch(theta, phi, tv), tv),
                  "rank3 sample " + std::to_string(i));
        } catch (const Error &e) {
            t.fail("rank3 sample " + std::to_string(i) + ": " + e.what());
        }
    }
    return {4, "non-unital UQT families", t.ok,
            t.summary("500 rank-4 + 500 rank-3 channels valid, worst error " + g(t.worst))};
}

Outcome named_examples() {
    Tally t;
    const TwoQubitState bell = bell_state(1);
    const auto one = [&](const QubitChannel &ch, double f, bool useful, const std::string &label) {
        const TeleportProfile p = through(bell, ch);
        if (!p.formula_valid) {
            t.fail(label + ": formula not applicable");
            return;
        }
        t.close(*p.f_max, f, 1e-12, label + " f_max");
        t.close(*p.delta, 0.0, 1e-12, label + " delta");
        t.expect(p.useful == useful, label + " usefulness");
    };
    one(fam::example_rank4(), 0.75, true, "example_rank4");
    one(fam::example_rank3_universal_only(), 0.55, false, "example_rank3_universal_only");
    for (double p : {0.2, 0.3, 0.34, 0.6, 0.9})
        one(fam::example_rank3(p), 0.5 * (1.0 + p), p > 1.0 / 3.0, "example_rank3(" + g(p) + ")");
    return {5, "named examples", t.ok,
            t.summary("(3/4, 0), (11/20, 0), (0.8, 0) at p = 0.6; usefulness flips at p = 1/3")};
}

Outcome gadc_on_bell() {
    Tally t;
    const TwoQubitState bell = bell_state(1);
    for (double n : {0.5, 0.7}) {
        for (double gm : {0.1, 0.5, 0.82}) {
            const TeleportProfile p = through(bell, fam::gadc(gm, n));
            if (!p.formula_valid) {
                t.fail("gadc formula not applicable");
                continue;
            }
            const double r = std::sqrt(1.0 - gm);
            t.close(*p.f_max, 0.5 + (2.0 * r + (1.0 - gm)) / 6.0, 1e-12, "gadc f_max");
            t.close(*p.delta, r * (1.0 - r) / (3.0 * kSqrt5), 1e-12, "gadc delta");
        }
    }
    const double worst_form = t.worst;
    double crit = std::nan("");
    try {
        ex::Scenario sc{{"gadc", {{"N", 0.7}}}, ex::InitialState{}};
        crit = ex::find_threshold(sc, "gamma", 0.5, 0.95, ex::Predicate::Useful, 1e-10)
                   .critical_value;
        t.close(crit, 2.0 * (std::sqrt(2.0) - 1.0), 1e-8, "gadc usefulness threshold");
    } catch (const Error &e) {
        t.fail(e.what());
    }
    return {6, "GADC on Bell", t.ok,
            t.summary("closed forms within " + g(worst_form) + ", threshold " + g(crit))};
}

Outcome unital_for_pure() {
    Tally t;
    for (double c : {0.55, 0.7, 0.9}) {
        const double lo = (1.0 + 2.0 * c) / (6.0 * c), hi = 1.0 / (2.0 - c);
        const TwoQubitState psi = pure_state(pure_state_a_for_concurrence(c));
        const TeleportProfile p = through(psi, fam::uqt_unital_for_pure(c, 0.5 * (lo + hi)));
        t.expect(p.uqt, "C = " + g(c) + " not uqt");
    }
    const TwoQubitState psi = pure_state(pure_state_a_for_concurrence(0.45));
    int tried = 0;
    const int n = 200;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double p0 = static_cast<double>(i) / (n - 1);
            const double p1 = 0.5 * static_cast<double>(j) / (n - 1);
            const double p3 = 1.0 - p0 - 2.0 * p1;
            if (p3 < 0.0) continue;
            ++tried;
            if (through(psi, fam::pauli_mixture(p0, p1, p1, p3)).uqt)
                t.fail("UQT Pauli mixture at C = 0.45: p0 = " + g(p0) + ", p1 = " + g(p1));
        }
    }
    std::exponential_distribution<double> e1;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        auto rng = random::stream(707, i);
        std::array<double, 4> w;
        double sum = 0.0;
        for (double &x : w) sum += (x = e1(rng));
        for (double &x : w) x /= sum;
        ++tried;
        if (through(psi, fam::pauli_mixture(w[0], w[1], w[2], w[3])).uqt)
            t.fail("UQT random Pauli mixture at C = 0.45");
    }
    return {7, "unital channels for pure inputs", t.ok,
            t.summary("C = 0.55, 0.7, 0.9 reach UQT; " + std::to_string(tried) +
                      " Pauli mixtures at C = 0.45 do not")};
}

Outcome nonunital_thresholds() {
    Tally t;
    ex::InitialState matched;
    matched.kind = ex::InitialState::Kind::Matched;
    const double tilde_want = (std::sqrt(17.0) - 1.0) / 6.0;
    const double k = 4.0 + std::sqrt(3.0);
    const double star_want = std::sqrt(2.0 / 3.0 * k * (1.0 - k / 6.0));
    double tilde = std::nan(""), star = std::nan("");
    try {
        ex::Scenario sc{{"lambda_tilde_nu", {{"p2_frac", 1.0 - 1e-9}}}, matched};
        tilde = ex::find_threshold(sc, "p1", 0.3, 0.9, ex::Predicate::Uqt, 1e-9).critical_value;
        t.close(tilde, tilde_want, 1e-6, "lambda_tilde_nu threshold");
    } catch (const Error &e) {
        t.fail(e.what());
    }
    try {
        ex::Scenario sc{{"lambda_star_nu", {}}, matched};
        star = ex::find_threshold(sc, "p1", 0.2, 0.9, ex::Predicate::Uqt, 1e-9).critical_value;
        t.close(star, star_want, 1e-6, "lambda_star_nu threshold");
        t.expect(star < 0.42, "lambda_star_nu threshold not near 0.41");
    } catch (const Error &e) {
        t.fail(e.what());
    }
    const auto low = ex::search_uqt(0.2, 400, 7);
    return {8, "non-unital thresholds", t.ok,
            t.summary("tilde " + g(tilde) + " (want " + g(tilde_want) + "), star " + g(star) +
                      " (closed form " + g(star_want) + "); search at C = 0.2: " +
                      std::to_string(low.hit_count) + " hits in " + std::to_string(low.evaluated) +
                      " samples, inconclusive")};
}

struct NoiseCase {
    std::string id;
    ParamMap params;
    double f;
    double delta;
    bool useful_for_uqt;
};

double dephasing_f(double p) { return (2.0 + std::abs(1.0 - 2.0 * p)) / 3.0; }
double dephasing_d(double p) { return (1.0 - std::abs(1.0 - 2.0 * p)) / (3.0 * kSqrt5); }
double damping_f(double r) { return 0.5 + (2.0 * r + r * r) / 6.0; }
double damping_d(double r) { return r * (1.0 - r) / (3.0 * kSqrt5); }

std::vector<NoiseCase> noise_cases() {
    std::vector<NoiseCase> v;
    for (double p : {0.1, 0.4}) v.push_back({"depolarizing_m", {{"p", p}}, 1.0 - 2.0 * p / 3.0, 0.0, true});
    for (double p : {0.2, 0.7}) v.push_back({"dephasing_m", {{"p", p}}, dephasing_f(p), dephasing_d(p), false});
    for (double tm : {0.3, 1.5}) {
        const double r = std::sqrt(std::exp(-0.8 * tm));
        v.push_back({"adc_m", {{"gamma", 0.8}, {"t", tm}}, damping_f(r), damping_d(r), false});
    }
    for (double tm : {0.2, 2.0}) {
        const double p = std::exp(-0.5 * tm);
        v.push_back({"pln_m", {{"G", 0.5}, {"t", tm}}, dephasing_f(p), dephasing_d(p), false});
    }
    for (double tm : {0.4, 3.0}) {
        const double p = std::exp(-0.6 * tm / 2.0);
        v.push_back({"oun_m", {{"G", 0.6}, {"t", tm}}, dephasing_f(p), dephasing_d(p), false});
    }
    for (double r : {0.3, 0.7}) {
        v.push_back({"unruh", {{"r", r}}, damping_f(std::cos(r)), damping_d(std::cos(r)), false});
    }
    for (auto [a, p] : {std::pair{0.5, 0.2}, std::pair{0.9, 0.1}}) {
        v.push_back({"depolarizing_nm", {{"alpha", a}, {"p", p}},
                     1.0 - 2.0 * p * (1.0 + 3.0 * a * (1.0 - p)) / 3.0, 0.0, true});
    }
    for (auto [a, p] : {std::pair{0.5, 0.1}, std::pair{0.8, 0.45}}) {
        const double w3 = p * (1.0 + a * (1.0 - p));
        const double f = w3 < 0.5 ? 1.0 - 2.0 * w3 / 3.0 : (1.0 + 2.0 * w3) / 3.0;
        const double d = w3 < 0.5 ? 2.0 * w3 / (3.0 * kSqrt5) : 2.0 * (1.0 - w3) / (3.0 * kSqrt5);
        v.push_back({"dephasing_nm", {{"alpha", a}, {"p", p}}, f, d, false});
    }
    // Non-Markovian time rows: the damping/dephasing factor p(t) is taken
    // from the channel, the closed forms in p are checked here.
    for (double tm : {0.5, 2.0})
        v.push_back({"adc_nm", {{"R", 0.5}, {"gamma", 1.0}, {"omega0", 1.0}, {"g", 1.0}, {"t", tm}},
                     -1, -1, false});
    for (double tm : {0.5, 2.0})
        v.push_back({"pln_nm", {{"G", 0.5}, {"g", 1.0}, {"t", tm}}, -1, -1, false});
    for (double tm : {0.5, 2.0})
        v.push_back({"oun_nm", {{"G", 0.5}, {"g", 1.0}, {"t", tm}}, -1, -1, false});
    for (double tm : {0.5, 2.0})
        v.push_back({"rtn_nm", {{"g", 0.5}, {"omega", 2.0}, {"t", tm}}, -1, -1, false});
    return v;
}

Outcome noise_table() {
    Tally t;
    const TwoQubitState bell = bell_state(1);
    std::vector<std::string> rows;
    for (NoiseCase nc : noise_cases()) {
        const std::string label = nc.id;
        try {
            const QubitChannel ch = fam::make({nc.id, nc.params});
            if (nc.f < 0.0) {
                const double p = ch.params().at("p");
                if (nc.id == "adc_nm") {
                    nc.f = damping_f(std::sqrt(1.0 - p));
                    nc.delta = damping_d(std::sqrt(1.0 - p));
                } else {
                    nc.f = dephasing_f(p);
                    nc.delta = dephasing_d(p);
                }
            }
            const TeleportProfile prof = through(bell, ch);
            if (!prof.formula_valid) {
                t.fail(label + ": formula not applicable");
                continue;
            }
            t.close(*prof.f_max, nc.f, 1e-10, label + " f_max");
            t.close(*prof.delta, nc.delta, 1e-10, label + " delta");
            // Verdict: keeps Delta = 0 while useful.
            const bool verdict = prof.useful && prof.universal;
            t.expect(verdict == nc.useful_for_uqt, label + " verdict");
            if (std::find(rows.begin(), rows.end(), nc.id) == rows.end()) rows.push_back(nc.id);
        } catch (const Error &e) {
            t.fail(label + ": " + e.what());
        }
    }
    t.expect(rows.size() == 12, "covered " + std::to_string(rows.size()) + " of 12 rows");
    return {9, "noise table", t.ok,
            t.summary("12 rows x 2 points, worst error " + g(t.worst) + ", verdicts match")};
}

Outcome oracle_equivalence() {
    Tally t;
    int found = 0;
    for (std::uint64_t i = 0; found < 100 && i < 100000; ++i) {
        auto rng = random::stream(1010, i);
        const TwoQubitState s = random::random_state(rng, 1 + static_cast<int>(i % 4));
        const TeleportProfile p = profile(s);
        if (!(p.det_t < 0.0)) continue;
        ++found;
        const auto m = oracle::optimal_moments(s);
        t.close(m.mean_f, *p.f_max, 1e-6, "mean fidelity");
        t.close(m.delta, *p.delta, 1e-6, "fidelity deviation");
    }
    t.expect(found == 100, "only " + std::to_string(found) + " det(T) < 0 states drawn");
    const double worst_moment = t.worst;
    double worst_fid = 0.0;
    const TwoQubitState bell = bell_state(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::uint64_t i = 0; i < 50; ++i) {
        auto rng = random::stream(1011, i);
        const Eigen::Vector3d n = oracle::bloch_vector(std::acos(2.0 * u(rng) - 1.0), 2.0 * M_PI * u(rng));
        const double f = oracle::teleport_fidelity(bell, n);
        worst_fid = std::max(worst_fid, 1.0 - f);
        t.expect(f >= 1.0 - 1e-12, "Bell teleportation fidelity " + g(f));
    }
    return {10, "oracle equivalence", t.ok,
            t.summary("100 states, worst moment gap " + g(worst_moment) + "; Bell fidelity loss " +
                      g(worst_fid))};
}

Outcome monotonicity() {
    Tally t;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_c = -1.0, worst_f = -1.0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        auto rng = random::stream(1111, i);
        const QubitChannel ch = random::random_channel(rng, 1 + static_cast<int>(i % 4));
        // Concurrence moves like sqrt(roundoff) near rank-deficient states, so
        // the 1e-10 budget is only meaningful on full-rank inputs.
        const TwoQubitState s = random::random_state(rng, 4);
        const double dc = concurrence(apply_to_bob(s, ch)) - concurrence(s);
        worst_c = std::max(worst_c, dc);
        t.expect(dc <= 1e-10, "concurrence increased by " + g(dc) + " at sample " + std::to_string(i));

        const TwoQubitState psi = pure_state(0.5 + 0.499 * u(rng));
        const double df = general_fmax(through(psi, ch)) - general_fmax(profile(psi));
        worst_f = std::max(worst_f, df);
        t.expect(df <= 1e-10, "f_max increased by " + g(df) + " at sample " + std::to_string(i));
    }
    return {11, "monotonicity", t.ok,
            t.summary("500 pairs; largest increase in concurrence " + g(worst_c) + ", in f_max " +
                      g(worst_f))};
}

} // namespace

std::vector<Outcome> run_all(const std::function<void(const Outcome &)> &on_result) {
    using Check = Outcome (*)();
    const Check checks[] = {dephasing_law,     rank_two_no_uqt,    werner_threshold,
                            uqt_families, named_examples,     gadc_on_bell,
                            unital_for_pure,   nonunital_thresholds, noise_table,
                            oracle_equivalence, monotonicity};
    std::vector<Outcome> out;
    int id = 1;
    for (Check c : checks) {
        Outcome o;
        try {
            o = c();
        } catch (const std::exception &e) {
            o = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
        }
        if (on_result) on_result(o);
        out.push_back(std::move(o));
        ++id;
    }
    return out;
}

std::string format_line(const Outcome &o) {
    std::ostringstream s;
    s << (o.passed ? "PASS" : "FAIL") << " [" << o.id << "] " << o.name << ": " << o.detail;
    return s.str();
}

} // namespace uqt::acceptance
