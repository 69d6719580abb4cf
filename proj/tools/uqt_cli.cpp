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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uqt/acceptance.hpp"
#include "uqt/channel_io.hpp"
#include "uqt/explorer.hpp"
#include "uqt/families.hpp"

namespace {

namespace ex = uqt::explorer;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kRange = 3;
constexpr int kOracle = 4;

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

int cmd_analyze(const std::string &path, const std::string &initial) {
    const uqt::QubitChannel ch = uqt::read_channel_file(path);
    const ex::Analysis a = ex::analyze(ch, ex::parse_initial(initial));
    std::cout << a.document.dump(2) << '\n';
    return a.oracle_agrees ? kOk : kOracle;
}

int cmd_sweep(const std::string &path, const std::string &out_path) {
    std::ifstream in(path);
    if (!in) throw uqt::RangeError("cannot open sweep spec " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error &e) {
        throw uqt::RangeError(std::string("sweep spec: ") + e.what());
    }
    const ex::SweepSpec spec = ex::sweep_spec_from_json(doc);
    const ex::SweepResult r = ex::run_sweep(spec);
    if (out_path.empty() || out_path == "-") {
        ex::write_csv(r, spec, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw uqt::Error("cannot write " + out_path);
        ex::write_csv(r, spec, out);
    }
    std::size_t invalid = 0;
    for (const auto &row : r.rows) invalid += row.status.rfind("invalid", 0) == 0;
    std::cerr << r.rows.size() << " rows, " << invalid << " invalid, " << r.crossings.size()
              << " predicate crossings\n";
    for (const auto &c : r.crossings) {
        std::cerr << "  " << ex::to_string(c.predicate) << (c.from ? " true->false" : " false->true")
                  << " between " << c.param << " = " << short_num(c.below) << " and "
                  << short_num(c.above);
        const auto &row = r.rows[c.row].params;
        for (std::size_t k = 0; k + 1 < row.size(); ++k)
            std::cerr << (k == 0 ? " at " : ", ") << r.param_names[k] << " = " << short_num(row[k]);
        std::cerr << '\n';
    }
    return r.oracle_disagreement ? kOracle : kOk;
}

int cmd_threshold(const std::string &family, const std::string &param,
                  const std::vector<double> &bracket, const std::string &predicate,
                  const std::vector<std::string> &fixed, const std::string &initial,
                  double tol) {
    if (bracket.size() != 2) throw uqt::RangeError("--bracket needs exactly lo,hi");
    ex::Scenario sc{{family, {}}, ex::parse_initial(initial)};
    for (const std::string &kv : fixed) {
        const auto eq = kv.find('=');
        double v = 0.0;
        try {
            if (eq == std::string::npos) throw std::invalid_argument(kv);
            std::size_t used = 0;
            v = std::stod(kv.substr(eq + 1), &used);
            if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
        } catch (const std::exception &) {
            throw uqt::RangeError("--set expects name=value, got '" + kv + "'");
        }
        sc.family.params[kv.substr(0, eq)] = v;
    }
    const ex::ThresholdResult r =
        ex::find_threshold(sc, param, bracket[0], bracket[1], ex::parse_predicate(predicate), tol);
    json doc{{"family", family},
             {"param", r.param},
             {"predicate", ex::to_string(r.predicate)},
             {"critical_value", r.critical_value},
             {"bracket_width", r.bracket_width},
             {"holds_below", r.value_below}};
    std::cout << doc.dump(2) << '\n';
    return kOk;
}

int cmd_search(double c, int budget, std::uint64_t seed) {
    const ex::SearchReport r = ex::search_uqt(c, budget, seed);
    std::cout << ex::to_json(r).dump(2) << '\n';
    return kOk;
}

int cmd_list_families() {
    for (const auto &f : uqt::families::catalog()) {
        std::cout << f.id << "  [" << (f.unital ? "unital" : "non-unital") << ", rank "
                  << f.choi_rank << "]  " << f.source << '\n';
        for (const auto &p : f.params) {
            std::cout << "    " << p.name << " in " << uqt::families::format_range(p);
            if (!p.note.empty()) std::cout << "  (" << p.note << ')';
            std::cout << '\n';
        }
    }
    return kOk;
}

int cmd_verify() {
    bool all = true;
    uqt::acceptance::run_all([&](const uqt::acceptance::Outcome &o) {
        std::cout << uqt::acceptance::format_line(o) << std::endl;
        all = all && o.passed;
    });
    return all ? kOk : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Teleportation fidelity and deviation explorer for noisy qubit channels"};
    app.require_subcommand(1);

    std::string channel_path, initial = "bell1";
    auto *analyze = app.add_subcommand("analyze", "Profile a channel file applied to Bob's qubit");
    analyze->add_option("channel", channel_path, "channel JSON file")->required();
    analyze->add_option("--initial", initial, "bell1..bell4, pure:<a> or matched");

    std::string sweep_path, out_path;
    auto *sweep = app.add_subcommand("sweep", "Grid sweep to CSV");
    sweep->add_option("spec", sweep_path, "sweep spec JSON file")->required();
    sweep->add_option("-o,--output", out_path, "CSV path (stdout when omitted)");

    std::string family, param, predicate, th_initial = "bell1";
    std::vector<double> bracket;
    std::vector<std::string> fixed;
    double tol = 1e-8;
    auto *threshold = app.add_subcommand("threshold", "Bisect for a predicate flip");
    threshold->add_option("--family", family)->required();
    threshold->add_option("--param", param)->required();
    threshold->add_option("--bracket", bracket, "lo,hi")->required()->delimiter(',')->expected(2);
    threshold->add_option("--predicate", predicate, "useful | universal | uqt")->required();
    threshold->add_option("--set", fixed, "fixed parameter, name=value")->delimiter(',');
    threshold->add_option("--initial", th_initial, "bell1..bell4, pure:<a> or matched");
    threshold->add_option("--tol", tol, "bracket width to stop at");

    double conc = 0.0;
    int budget = 1000;
    std::uint64_t seed = 1;
    auto *search = app.add_subcommand("search-uqt", "Randomized search for non-unital UQT channels");
    search->add_option("--concurrence", conc)->required();
    search->add_option("--budget", budget);
    search->add_option("--seed", seed);

    auto *list = app.add_subcommand("list-families", "Show the channel catalog");
    auto *verify = app.add_subcommand("verify", "Run the acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kRange;
    }

    try {
        if (*analyze) return cmd_analyze(channel_path, initial);
        if (*sweep) return cmd_sweep(sweep_path, out_path);
        if (*threshold)
            return cmd_threshold(family, param, bracket, predicate, fixed, th_initial, tol);
        if (*search) return cmd_search(conc, budget, seed);
        if (*list) return cmd_list_families();
        if (*verify) return cmd_verify();
    } catch (const uqt::ValidationError &e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const uqt::RangeError &e) {
        std::cerr << "out of range: " << e.what() << '\n';
        return kRange;
    } catch (const uqt::DimensionError &e) {
        std::cerr << "dimension error: " << e.what() << '\n';
        return kValidation;
    } catch (const uqt::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kValidation;
    }
    return kOk;
}
