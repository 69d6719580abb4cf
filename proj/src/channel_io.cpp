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

#include "uqt/channel_io.hpp"

#include <fstream>

namespace uqt {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string &why) {
    throw ValidationError(ValidationError::Kind::Parse, 0.0, "channel document: " + why);
}

} // namespace

json channel_to_json(const QubitChannel &ch) {
    json kraus = json::array();
    for (const Mat2 &k : ch.kraus()) {
        json entries = json::array();
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) entries.push_back({k(r, c).real(), k(r, c).imag()});
        kraus.push_back(std::move(entries));
    }
    json params = json::object();
    for (const auto &[key, value] : ch.params()) params[key] = value;
    return json{{"name", ch.name()}, {"kraus", std::move(kraus)}, {"params", std::move(params)}};
}

QubitChannel channel_from_json(const json &doc) {
    if (!doc.is_object()) parse_fail("top level must be an object");
    if (!doc.contains("kraus") || !doc["kraus"].is_array()) parse_fail("missing \"kraus\" array");
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) parse_fail("\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    ParamMap params;
    if (doc.contains("params")) {
        if (!doc["params"].is_object()) parse_fail("\"params\" must be an object");
        for (const auto &[key, value] : doc["params"].items()) {
            if (!value.is_number()) parse_fail("param \"" + key + "\" is not a number");
            params[key] = value.get<double>();
        }
    }
    KrausList kraus;
    for (const json &op : doc["kraus"]) {
        if (!op.is_array() || op.size() != 4) parse_fail("each Kraus operator needs 4 entries");
        Mat2 k;
        for (int i = 0; i < 4; ++i) {
            const json &z = op[static_cast<std::size_t>(i)];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                parse_fail("entries must be [re, im] pairs");
            }
            k(i / 2, i % 2) = cplx(z[0].get<double>(), z[1].get<double>());
        }
        kraus.push_back(k);
    }
    return validate(std::move(kraus), std::move(name), std::move(params));
}

QubitChannel read_channel_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error &e) {
        parse_fail(e.what());
    }
    return channel_from_json(doc);
}

void write_channel_file(const QubitChannel &ch, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << channel_to_json(ch).dump(2) << '\n';
}

} // namespace uqt
