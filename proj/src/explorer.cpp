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

#include "uqt/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "uqt/channel_io.hpp"
#include "uqt/hermitian_eig.hpp"
#include "uqt/random.hpp"

namespace uqt::explorer {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string short_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

Predicate parse_predicate(const std::string &s) {
    if (s == "useful") return Predicate::Useful;
    if (s == "universal") return Predicate::Universal;
    if (s == "uqt") return Predicate::Uqt;
    throw RangeError("unknown predicate '" + s + "' (expected useful, universal or uqt)");
}

std::string to_string(Predicate p) {
    switch (p) {
    case Predicate::Useful: return "useful";
    case Predicate::Universal: return "universal";
    case Predicate::Uqt: return "uqt";
    }
    return "?";
}

bool holds(const TeleportProfile &p, Predicate pred) {
    switch (pred) {
    case Predicate::Useful: return p.useful;
    case Predicate::Universal: return p.universal;
    case Predicate::Uqt: return p.uqt;
    }
    return false;
}

InitialState parse_initial(const std::string &s) {
    InitialState out;
    if (s.size() == 5 && s.rfind("bell", 0) == 0 && s[4] >= '1' && s[4] <= '4') {
        out.kind = InitialState::Kind::Bell;
        out.bell = s[4] - '0';
        return out;
    }
    if (s.rfind("pure:", 0) == 0) {
        out.kind = InitialState::Kind::Pure;
        try {
            std::size_t used = 0;
            out.a = std::stod(s.substr(5), &used);
            if (used != s.size() - 5) throw std::invalid_argument(s);
        } catch (const std::exception &) {
            throw RangeError("initial state: cannot parse '" + s + "'");
        }
        if (!(out.a >= 0.5 && out.a < 1.0)) {
            throw RangeError("initial state: a must lie in [0.5, 1), got " + s.substr(5));
        }
        return out;
    }
    if (s == "matched") {
        out.kind = InitialState::Kind::Matched;
        return out;
    }
    throw RangeError("initial state must be bell1..bell4, pure:<a> or matched, got '" + s + "'");
}

std::string to_string(const InitialState &s) {
    switch (s.kind) {
    case InitialState::Kind::Bell: return "bell" + std::to_string(s.bell);
    case InitialState::Kind::Pure: return "pure:" + format_double(s.a);
    case InitialState::Kind::Matched: return "matched";
    }
    return "?";
}

TwoQubitState resolve_initial(const InitialState &s, const std::string &family,
                              const ParamMap &params) {
    switch (s.kind) {
    case InitialState::Kind::Bell: return bell_state(s.bell);
    case InitialState::Kind::Pure: return pure_state(s.a);
    case InitialState::Kind::Matched: break;
    }
    std::vector<std::string> keys;
    try {
        const std::string &m = families::info(family).matched_param;
        if (!m.empty()) keys.push_back(m);
    } catch (const RangeError &) {
        keys = {"c", "p1"};
    }
    for (const auto &k : keys) {
        const auto it = params.find(k);
        if (it != params.end()) return pure_state(pure_state_a_for_concurrence(it->second));
    }
    throw RangeError("initial state 'matched' needs a family tuned to a pure input; '" + family +
                     "' has none");
}

Evaluation evaluate(const Scenario &s) {
    QubitChannel ch = families::make(s.family);
    const TwoQubitState init = resolve_initial(s.initial, s.family.family_id, s.family.params);
    ChannelReport rep = report(ch);
    TwoQubitState fin = apply_to_bob(init, ch);
    TeleportProfile prof = profile(fin);
    return Evaluation{std::move(ch), std::move(rep), std::move(fin), std::move(prof)};
}

OracleCheck cross_check(const TwoQubitState &s, const TeleportProfile &p,
                        const oracle::QuadratureSpec &q) {
    OracleCheck c;
    c.moments = oracle::optimal_moments(s, q);
    if (p.formula_valid) {
        c.agrees = std::abs(c.moments.mean_f - *p.f_max) <= kOracleTolerance &&
                   std::abs(c.moments.delta - *p.delta) <= kOracleTolerance;
    }
    return c;
}

// -- Sweeps -----------------------------------------------------------------

std::vector<double> Axis::values() const {
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = start + static_cast<double>(i) * step;
    return v;
}

void check_sweep_spec(const SweepSpec &spec) {
    if (spec.axes.empty()) throw RangeError("sweep: at least one axis is required");
    double rows = 1.0;
    for (const Axis &a : spec.axes) {
        if (!(a.step > 0.0)) throw RangeError("sweep: axis " + a.name + " needs step > 0");
        if (!(a.start <= a.stop)) throw RangeError("sweep: axis " + a.name + " needs start <= stop");
        rows *= std::floor((a.stop - a.start) / a.step + 1e-9) + 1.0;
    }
    if (rows > static_cast<double>(spec.max_rows)) {
        throw RangeError("sweep: grid has " + short_num(rows) + " rows, cap is " +
                         std::to_string(spec.max_rows));
    }
    families::info(spec.family.family_id);
}

SweepSpec sweep_spec_from_json(const json &doc) {
    try {
        SweepSpec s;
        s.family.family_id = doc.at("family").get<std::string>();
        if (doc.contains("params")) {
            for (const auto &[k, v] : doc.at("params").items()) s.family.params[k] = v.get<double>();
        }
        for (const json &a : doc.at("axes")) {
            s.axes.push_back(Axis{a.at("name").get<std::string>(), a.at("start").get<double>(),
                                  a.at("stop").get<double>(), a.at("step").get<double>()});
        }
        s.initial = parse_initial(doc.value("initial", std::string("bell1")));
        if (doc.contains("outputs")) s.outputs = doc.at("outputs").get<std::vector<std::string>>();
        s.max_rows = doc.value("max_rows", s.max_rows);
        s.oracle_every = doc.value("oracle_every", s.oracle_every);
        if (doc.contains("quadrature")) {
            s.quadrature.n_theta = doc["quadrature"].value("n_theta", 64);
            s.quadrature.n_phi = doc["quadrature"].value("n_phi", 64);
        }
        check_sweep_spec(s);
        return s;
    } catch (const json::exception &e) {
        throw RangeError(std::string("sweep spec: ") + e.what());
    }
}

namespace {

const std::vector<std::string> kResultColumns = {
    "f_max", "delta", "det_t", "choi_rank", "unital", "useful", "universal", "uqt",
    "oracle_checked"};

std::string b2s(bool b) { return b ? "true" : "false"; }

} // namespace

std::vector<std::string> csv_columns(const SweepSpec &spec) {
    if (spec.outputs.empty()) return kResultColumns;
    std::vector<std::string> out;
    for (const auto &c : kResultColumns)
        if (std::find(spec.outputs.begin(), spec.outputs.end(), c) != spec.outputs.end())
            out.push_back(c);
    for (const auto &o : spec.outputs)
        if (std::find(kResultColumns.begin(), kResultColumns.end(), o) == kResultColumns.end())
            throw RangeError("sweep: unknown output column " + o);
    return out;
}

SweepResult run_sweep(const SweepSpec &spec) {
    check_sweep_spec(spec);
    csv_columns(spec);
    SweepResult res;
    res.family = spec.family.family_id;
    std::vector<std::vector<double>> grids;
    for (const Axis &a : spec.axes) {
        res.param_names.push_back(a.name);
        grids.push_back(a.values());
    }

    std::vector<std::size_t> idx(grids.size(), 0);
    std::size_t row_no = 0;
    for (;;) {
        Scenario sc{spec.family, spec.initial};
        SweepRow row;
        for (std::size_t k = 0; k < grids.size(); ++k) {
            row.params.push_back(grids[k][idx[k]]);
            sc.family.params[spec.axes[k].name] = grids[k][idx[k]];
        }
        try {
            const Evaluation ev = evaluate(sc);
            row.profile = ev.profile;
            row.choi_rank = ev.report.choi_rank;
            row.unital = ev.report.unital;
            if (spec.oracle_every > 0 && row_no % static_cast<std::size_t>(spec.oracle_every) == 0 &&
                ev.profile.formula_valid) {
                const OracleCheck chk = cross_check(ev.final_state, ev.profile, spec.quadrature);
                row.oracle_checked = true;
                row.oracle_agrees = chk.agrees;
                if (!chk.agrees) {
                    row.status = "oracle disagreement";
                    res.oracle_disagreement = true;
                }
            }
        } catch (const Error &e) {
            row.status = std::string("invalid: ") + e.what();
        }
        res.rows.push_back(std::move(row));
        ++row_no;

        // Lexicographic order: last axis fastest.
        std::size_t k = grids.size();
        while (k > 0) {
            --k;
            if (++idx[k] < grids[k].size()) break;
            idx[k] = 0;
            if (k == 0) goto done;
        }
        if (grids.empty()) break;
    }
done:
    // Predicate flips along the last axis.
    const std::size_t last = grids.size() - 1;
    const std::size_t run = grids[last].size();
    for (std::size_t base = 0; base < res.rows.size(); base += run) {
        for (Predicate pred : {Predicate::Useful, Predicate::Universal, Predicate::Uqt}) {
            const SweepRow *prev = nullptr;
            for (std::size_t i = base; i < base + run; ++i) {
                const SweepRow &r = res.rows[i];
                if (!r.profile) continue;
                if (prev && holds(*prev->profile, pred) != holds(*r.profile, pred)) {
                    res.crossings.push_back(Crossing{pred, res.param_names[last],
                                                     prev->params[last], r.params[last],
                                                     holds(*prev->profile, pred), i});
                }
                prev = &r;
            }
        }
    }
    return res;
}

void write_csv(const SweepResult &r, const SweepSpec &spec, std::ostream &out) {
    const auto cols = csv_columns(spec);
    out << "family";
    for (const auto &p : r.param_names) out << ",param:" << p;
    for (const auto &c : cols) out << ',' << c;
    out << ",status\n";
    for (const SweepRow &row : r.rows) {
        out << r.family;
        for (double v : row.params) out << ',' << format_double(v);
        for (const auto &c : cols) {
            out << ',';
            if (c == "oracle_checked") {
                out << b2s(row.oracle_checked);
                continue;
            }
            if (!row.profile) continue;
            const TeleportProfile &p = *row.profile;
            if (c == "f_max") {
                if (p.f_max) out << format_double(*p.f_max);
            } else if (c == "delta") {
                if (p.delta) out << format_double(*p.delta);
            } else if (c == "det_t") {
                out << format_double(p.det_t);
            } else if (c == "choi_rank") {
                out << row.choi_rank;
            } else if (c == "unital") {
                out << b2s(row.unital);
            } else if (c == "useful") {
                out << b2s(p.useful);
            } else if (c == "universal") {
                out << b2s(p.universal);
            } else if (c == "uqt") {
                out << b2s(p.uqt);
            }
        }
        std::string status = row.status;
        std::replace(status.begin(), status.end(), ',', ';');
        std::replace(status.begin(), status.end(), '\n', ' ');
        out << ',' << status << '\n';
    }
}

// -- Thresholds -------------------------------------------------------------

ThresholdResult find_threshold(const Scenario &base, const std::string &param, double lo,
                               double hi, Predicate pred, double tol) {
    if (!(lo < hi)) throw RangeError("threshold: bracket needs lo < hi");
    if (!(tol > 0.0)) throw RangeError("threshold: tolerance must be positive");
    const auto at = [&](double x) {
        Scenario s = base;
        s.family.params[param] = x;
        return holds(evaluate(s).profile, pred);
    };
    const bool flo = at(lo);
    const bool fhi = at(hi);
    if (flo == fhi) {
        throw RangeError("threshold: predicate " + to_string(pred) + " is " + b2s(flo) +
                         " at both ends of [" + short_num(lo) + ", " + short_num(hi) +
                         "]");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (at(mid) == flo) lo = mid;
        else hi = mid;
    }
    return ThresholdResult{param, 0.5 * (lo + hi), hi - lo, pred, flo};
}

// -- Search -----------------------------------------------------------------

namespace {

constexpr std::size_t kMaxHits = 20;

void add_to_frontier(std::vector<SearchPoint> &front, const SearchPoint &p) {
    for (const SearchPoint &q : front) {
        if (q.delta <= p.delta && q.f_max >= p.f_max) return;
    }
    front.erase(std::remove_if(front.begin(), front.end(),
                               [&](const SearchPoint &q) {
                                   return p.delta <= q.delta && p.f_max >= q.f_max;
                               }),
                front.end());
    front.push_back(p);
    std::sort(front.begin(), front.end(),
              [](const SearchPoint &a, const SearchPoint &b) { return a.delta < b.delta; });
}

} // namespace

SearchReport search_uqt(double c, int budget, std::uint64_t seed) {
    if (!(c > 0.0 && c < 1.0)) throw RangeError("search: concurrence must lie in (0, 1)");
    if (budget < 0) throw RangeError("search: budget must be non-negative");
    SearchReport rep;
    rep.concurrence = c;
    rep.budget = budget;
    rep.seed = seed;
    const TwoQubitState init = pure_state(pure_state_a_for_concurrence(c));
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    for (int i = 0; i < budget; ++i) {
        auto rng = random::stream(seed, static_cast<std::uint64_t>(i));
        SearchPoint pt;
        std::optional<QubitChannel> ch;
        try {
            switch (i % 4) {
            case 0: {
                const int rank = 3 + static_cast<int>(u01(rng) * 2.0);
                const Mat4 choi = random::random_choi(rng, std::min(rank, 4));
                const Eigen::Vector3d s = hs_decompose(choi).s;
                if (s.norm() <= 1e-6) continue; // unital, not what we are after
                pt.sampler = "random_choi";
                pt.params = {{"rank", static_cast<double>(std::min(rank, 4))}};
                ch = channel_from_choi(choi, "random_choi");
                break;
            }
            case 1: {
                const double g = u01(rng), n = u01(rng);
                pt.sampler = "gadc";
                pt.params = {{"gamma", g}, {"N", n}};
                ch = families::gadc(g, n);
                break;
            }
            case 2: {
                const double p2 = u01(rng) * families::lambda_tilde_p2_max(c);
                if (!(p2 > 0.0)) continue;
                pt.sampler = "lambda_tilde_nu";
                pt.params = {{"p1", c}, {"p2", p2}};
                ch = families::lambda_tilde_nu(c, p2);
                break;
            }
            default: {
                const double p1 = (i / 4) % 2 == 0 ? c : std::clamp(u01(rng), 1e-6, 1.0 - 1e-6);
                pt.sampler = "lambda_star_nu";
                pt.params = {{"p1", p1}};
                ch = families::lambda_star_nu(p1);
                break;
            }
            }
        } catch (const Error &) {
            continue;
        }
        if (report(*ch).unital) continue;
        const TeleportProfile prof = profile(apply_to_bob(init, *ch));
        ++rep.evaluated;
        if (!prof.formula_valid) continue;
        pt.f_max = *prof.f_max;
        pt.delta = *prof.delta;
        pt.uqt = prof.uqt;
        if (pt.uqt) {
            ++rep.hit_count;
            if (rep.hits.size() < kMaxHits) rep.hits.push_back(pt);
        }
        add_to_frontier(rep.frontier, pt);
    }
    return rep;
}

json to_json(const SearchReport &r) {
    const auto point = [](const SearchPoint &p) {
        json params = json::object();
        for (const auto &[k, v] : p.params) params[k] = v;
        return json{{"sampler", p.sampler}, {"params", params}, {"f_max", p.f_max},
                    {"delta", p.delta},     {"uqt", p.uqt}};
    };
    json hits = json::array(), front = json::array();
    for (const auto &p : r.hits) hits.push_back(point(p));
    for (const auto &p : r.frontier) front.push_back(point(p));
    return json{{"concurrence", r.concurrence},
                {"budget", r.budget},
                {"seed", r.seed},
                {"evaluated", r.evaluated},
                {"hit_count", r.hit_count},
                {"hits", hits},
                {"frontier", front},
                {"conclusive", r.hit_count > 0}};
}

// -- Analysis ---------------------------------------------------------------

Analysis analyze(const QubitChannel &ch, const InitialState &initial) {
    const TwoQubitState init = resolve_initial(initial, ch.name(), ch.params());
    const ChannelReport rep = report(ch);
    const TwoQubitState fin = apply_to_bob(init, ch);
    const TeleportProfile prof = profile(fin);
    const OracleCheck chk = cross_check(fin, prof);

    const auto vec = [](const Eigen::Vector3d &v) { return json{v(0), v(1), v(2)}; };
    json prof_doc{{"formula_valid", prof.formula_valid},
                  {"f_max", prof.f_max ? json(*prof.f_max) : json(nullptr)},
                  {"delta", prof.delta ? json(*prof.delta) : json(nullptr)},
                  {"det_t", prof.det_t},
                  {"abs_t", vec(prof.spectrum.abs_t)},
                  {"useful", prof.useful},
                  {"universal", prof.universal},
                  {"uqt", prof.uqt},
                  {"concurrence", concurrence(fin)}};
    json doc{{"channel", channel_to_json(ch)},
             {"initial", to_string(initial)},
             {"report",
              {{"unital", rep.unital},
               {"choi_rank", rep.choi_rank},
               {"trace_preserving_residual", rep.trace_preserving_residual},
               {"unitality_residual", rep.unitality_residual},
               {"choi_bob_vector", vec(rep.choi.hs().s)}}},
             {"profile", prof_doc},
             {"oracle",
              {{"mean_f", chk.moments.mean_f},
               {"delta", chk.moments.delta},
               {"tolerance", kOracleTolerance},
               {"compared", prof.formula_valid},
               {"agrees", chk.agrees}}}};
    return Analysis{doc, chk.agrees};
}

} // namespace uqt::explorer
