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

#include <sstream>

#include "doctest.h"
#include "uqt/explorer.hpp"

using namespace uqt;
namespace ex = uqt::explorer;
using nlohmann::json;

namespace {

ex::SweepSpec dephasing_spec() {
    return ex::sweep_spec_from_json(json::parse(R"({
        "family": "dephasing",
        "axes": [{"name": "p", "start": 0.0, "stop": 1.0, "step": 0.05}],
        "oracle_every": 4
    })"));
}

std::string csv_of(const ex::SweepSpec &spec) {
    std::ostringstream out;
    ex::write_csv(ex::run_sweep(spec), spec, out);
    return out.str();
}

} // namespace

TEST_CASE("parsing predicates and initial states") {
    CHECK(ex::parse_predicate("uqt") == ex::Predicate::Uqt);
    CHECK_THROWS_AS(ex::parse_predicate("good"), RangeError);
    CHECK(ex::parse_initial("bell3").bell == 3);
    CHECK(ex::parse_initial("pure:0.75").a == 0.75);
    CHECK(ex::parse_initial("matched").kind == ex::InitialState::Kind::Matched);
    CHECK_THROWS_AS(ex::parse_initial("bell5"), RangeError);
    CHECK_THROWS_AS(ex::parse_initial("pure:0.2"), RangeError);
    CHECK_THROWS_AS(ex::parse_initial("pure:abc"), RangeError);
    CHECK(ex::to_string(ex::parse_initial("pure:0.75")) == "pure:0.75");
}

TEST_CASE("matched initial state") {
    ex::InitialState m;
    m.kind = ex::InitialState::Kind::Matched;
    const TwoQubitState s = ex::resolve_initial(m, "lambda_star_nu", {{"p1", 0.6}});
    CHECK(concurrence(s) == doctest::Approx(0.6).epsilon(1e-7));
    CHECK_THROWS_AS(ex::resolve_initial(m, "werner", {{"p", 0.6}}), RangeError);
}

TEST_CASE("axis grids") {
    CHECK(ex::Axis{"p", 0.0, 1.0, 0.05}.values().size() == 21);
    CHECK(ex::Axis{"p", 0.0, 1.0, 0.1}.values().size() == 11);
    CHECK(ex::Axis{"p", 0.2, 0.2, 0.1}.values().size() == 1);
}

TEST_CASE("dephasing sweep: values, oracle checks and crossings") {
    const ex::SweepSpec spec = dephasing_spec();
    const ex::SweepResult r = ex::run_sweep(spec);
    REQUIRE(r.rows.size() == 21);
    int checked = 0;
    for (const ex::SweepRow &row : r.rows) {
        REQUIRE(row.profile);
        const double p = row.params[0];
        CHECK(*row.profile->f_max == doctest::Approx((2.0 + std::abs(2.0 * p - 1.0)) / 3.0));
        checked += row.oracle_checked;
        CHECK(row.oracle_agrees);
        CHECK(row.status == "ok");
    }
    CHECK(checked == 6); // rows 0, 4, ..., 20
    CHECK_FALSE(r.oracle_disagreement);

    int useful_flips = 0;
    for (const ex::Crossing &c : r.crossings) {
        if (c.predicate != ex::Predicate::Useful) continue;
        ++useful_flips;
        CHECK(std::abs(0.5 * (c.below + c.above) - 0.5) < 0.05);
    }
    CHECK(useful_flips == 2);
}

TEST_CASE("CSV layout and determinism") {
    const ex::SweepSpec spec = dephasing_spec();
    const std::string a = csv_of(spec), b = csv_of(spec);
    CHECK(a == b);
    std::istringstream in(a);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header ==
          "family,param:p,f_max,delta,det_t,choi_rank,unital,useful,universal,uqt,oracle_checked,status");
    CHECK(first.rfind("dephasing,0,", 0) == 0);

    ex::SweepSpec narrow = spec;
    narrow.outputs = {"delta", "f_max"};
    std::istringstream in2(csv_of(narrow));
    std::getline(in2, header);
    CHECK(header == "family,param:p,f_max,delta,status");
    narrow.outputs = {"nonsense"};
    CHECK_THROWS_AS(ex::run_sweep(narrow), RangeError);
}

TEST_CASE("rows outside the family range are flagged, not fatal") {
    ex::SweepSpec spec;
    spec.family.family_id = "werner";
    spec.axes = {{"p", 0.5, 1.5, 0.25}};
    const ex::SweepResult r = ex::run_sweep(spec);
    REQUIRE(r.rows.size() == 5);
    CHECK(r.rows[2].status == "ok");
    CHECK(r.rows[3].status.rfind("invalid: ", 0) == 0);
    CHECK_FALSE(r.rows[3].profile.has_value());
}

TEST_CASE("multi-axis sweeps run in lexicographic order") {
    ex::SweepSpec spec;
    spec.family.family_id = "gadc";
    spec.axes = {{"N", 0.0, 1.0, 0.5}, {"gamma", 0.0, 0.5, 0.25}};
    const ex::SweepResult r = ex::run_sweep(spec);
    REQUIRE(r.rows.size() == 9);
    CHECK(r.rows[1].params == std::vector<double>{0.0, 0.25});
    CHECK(r.rows[3].params == std::vector<double>{0.5, 0.0});
}

TEST_CASE("sweep spec validation") {
    CHECK_THROWS_AS(ex::sweep_spec_from_json(json::parse(R"({"axes": []})")), RangeError);
    CHECK_THROWS_AS(
        ex::sweep_spec_from_json(json::parse(R"({"family": "werner", "axes": []})")), RangeError);
    CHECK_THROWS_AS(ex::sweep_spec_from_json(json::parse(
                        R"({"family": "werner", "axes": [{"name": "p", "start": 0, "stop": 1, "step": 0}]})")),
                    RangeError);
    CHECK_THROWS_AS(ex::sweep_spec_from_json(json::parse(
                        R"({"family": "werner", "max_rows": 10,
                            "axes": [{"name": "p", "start": 0, "stop": 1, "step": 0.01}]})")),
                    RangeError);
}

TEST_CASE("threshold bisection") {
    const ex::Scenario werner{{"werner", {}}, {}};
    const ex::ThresholdResult r = ex::find_threshold(werner, "p", 0.3, 0.9, ex::Predicate::Useful);
    CHECK(std::abs(r.critical_value - 0.5) < 1e-8);
    CHECK(r.bracket_width <= 1e-8);
    CHECK_FALSE(r.value_below);

    // A rank-2 family is never universal on (0, 1), so there is nothing to bracket.
    const ex::Scenario deph{{"dephasing", {}}, {}};
    CHECK_THROWS_AS(ex::find_threshold(deph, "p", 0.01, 0.99, ex::Predicate::Universal), RangeError);
    CHECK_THROWS_AS(ex::find_threshold(werner, "p", 0.9, 0.3, ex::Predicate::Useful), RangeError);
}

TEST_CASE("randomized search") {
    const ex::SearchReport hit = ex::search_uqt(0.6, 200, 3);
    CHECK(hit.hit_count > 0);
    CHECK(hit.evaluated > 0);
    CHECK_FALSE(hit.frontier.empty());
    for (const auto &p : hit.hits) CHECK(p.uqt);
    CHECK(ex::to_json(hit).dump() == ex::to_json(ex::search_uqt(0.6, 200, 3)).dump());

    const ex::SearchReport miss = ex::search_uqt(0.2, 200, 3);
    CHECK(miss.hit_count == 0);
    CHECK(ex::to_json(miss)["conclusive"] == false);
    CHECK_THROWS_AS(ex::search_uqt(1.5, 10, 1), RangeError);
}

TEST_CASE("single-channel analysis") {
    const ex::Analysis a = ex::analyze(families::example_rank4(), ex::parse_initial("bell1"));
    CHECK(a.oracle_agrees);
    CHECK(a.document["profile"]["f_max"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(a.document["profile"]["uqt"] == true);
    CHECK(a.document["report"]["choi_rank"] == 4);
    CHECK(a.document["oracle"]["compared"] == true);

    ex::InitialState m;
    m.kind = ex::InitialState::Kind::Matched;
    const ex::Analysis b = ex::analyze(families::lambda_star_nu(0.6), m);
    CHECK(b.document["profile"]["uqt"] == true);
    CHECK(b.oracle_agrees);
}

TEST_CASE("Markovian OUN row stops being useful at t = 2 ln2 / G") {
    const double g = 1.5;
    const ex::Scenario oun{{"oun_m", {{"G", g}}}, {}};
    const double edge = 2.0 * std::log(2.0) / g;
    const ex::ThresholdResult r = ex::find_threshold(oun, "t", 0.1, edge, ex::Predicate::Useful);
    CHECK(std::abs(r.critical_value - edge) < 1e-7);
    CHECK(r.value_below);
}
