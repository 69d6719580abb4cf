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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "uqt/channels.hpp"
#include "uqt/families.hpp"
#include "uqt/oracle.hpp"

/// Sweeps, threshold bisection, randomized search and reports.
namespace uqt::explorer {

enum class Predicate { Useful, Universal, Uqt };
Predicate parse_predicate(const std::string &s);
std::string to_string(Predicate p);
bool holds(const TeleportProfile &p, Predicate pred);

/// bell1..bell4 | pure:a | matched (pure state whose concurrence equals the
/// family's matched parameter).
struct InitialState {
    enum class Kind { Bell, Pure, Matched };
    Kind kind = Kind::Bell;
    int bell = 1;
    double a = 0.5;
};
InitialState parse_initial(const std::string &s);
std::string to_string(const InitialState &s);
TwoQubitState resolve_initial(const InitialState &s, const std::string &family,
                              const ParamMap &params);

struct Scenario {
    families::FamilySpec family;
    InitialState initial;
};

struct Evaluation {
    QubitChannel channel;
    ChannelReport report;
    TwoQubitState final_state;
    TeleportProfile profile;
};
Evaluation evaluate(const Scenario &s);

/// Absolute tolerance for formula-versus-quadrature agreement.
inline constexpr double kOracleTolerance = 1e-6;

struct OracleCheck {
    oracle::NumericMoments moments;
    bool agrees = true;
};
/// Compares the closed forms with the simulated optimal protocol. Only
/// meaningful when profile.formula_valid.
OracleCheck cross_check(const TwoQubitState &s, const TeleportProfile &p,
                        const oracle::QuadratureSpec &q = {});

// -- Sweeps -----------------------------------------------------------------

struct Axis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    std::vector<double> values() const;
};

struct SweepSpec {
    families::FamilySpec family;
    std::vector<Axis> axes;
    InitialState initial;
    std::vector<std::string> outputs; ///< empty selects every column
    std::size_t max_rows = 1000000;
    int oracle_every = 50;
    oracle::QuadratureSpec quadrature;
};

/// Throws RangeError on malformed axes or a grid larger than max_rows.
SweepSpec sweep_spec_from_json(const nlohmann::json &doc);
void check_sweep_spec(const SweepSpec &spec);

struct SweepRow {
    std::vector<double> params;
    std::optional<TeleportProfile> profile;
    int choi_rank = 0;
    bool unital = false;
    bool oracle_checked = false;
    bool oracle_agrees = true;
    std::string status = "ok";
};

struct Crossing {
    Predicate predicate;
    std::string param;
    double below = 0.0; ///< last value before the flip
    double above = 0.0; ///< first value after the flip
    bool from = false;
    std::size_t row = 0; ///< index of the first row after the flip
};

struct SweepResult {
    std::string family;
    std::vector<std::string> param_names;
    std::vector<SweepRow> rows;
    std::vector<Crossing> crossings; ///< along the last axis
    bool oracle_disagreement = false;
};

SweepResult run_sweep(const SweepSpec &spec);
std::vector<std::string> csv_columns(const SweepSpec &spec);
void write_csv(const SweepResult &r, const SweepSpec &spec, std::ostream &out);

// -- Thresholds -------------------------------------------------------------

struct ThresholdResult {
    std::string param;
    double critical_value = 0.0;
    double bracket_width = 0.0;
    Predicate predicate = Predicate::Useful;
    bool value_below = false; ///< predicate on the low side
};

/// Bisection on the named parameter; the predicate must differ at the bracket ends.
ThresholdResult find_threshold(const Scenario &base, const std::string &param, double lo,
                               double hi, Predicate pred, double tol = 1e-8);

// -- Search -----------------------------------------------------------------

struct SearchPoint {
    std::string sampler;
    ParamMap params;
    double f_max = 0.0;
    double delta = 0.0;
    bool uqt = false;
};

struct SearchReport {
    double concurrence = 0.0;
    int budget = 0;
    std::uint64_t seed = 0;
    int evaluated = 0;
    int hit_count = 0;
    std::vector<SearchPoint> hits;     ///< first hits, capped
    std::vector<SearchPoint> frontier; ///< non-dominated (min delta, max f_max)
};

SearchReport search_uqt(double c, int budget, std::uint64_t seed);
nlohmann::json to_json(const SearchReport &r);

// -- Single-channel analysis ------------------------------------------------

struct Analysis {
    nlohmann::json document;
    bool oracle_agrees = true;
};
Analysis analyze(const QubitChannel &ch, const InitialState &initial);

std::string format_double(double v);

} // namespace uqt::explorer
