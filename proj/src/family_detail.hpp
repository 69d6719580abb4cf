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

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "uqt/families.hpp"

namespace uqt::families::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool in_range(const ParamRange &r, double v) {
    if (std::isnan(v)) return false;
    if (r.lo_open ? !(v > r.lo) : !(v >= r.lo)) return false;
    if (r.hi_open ? !(v < r.hi) : !(v <= r.hi)) return false;
    return true;
}

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline void require(const std::string &family, const ParamRange &r, double v) {
    if (!in_range(r, v)) {
        throw RangeError(family + ": " + r.name + " = " + num(v) + " outside " +
                         format_range(r));
    }
}

inline void require(const std::string &family, const std::string &name, double v, double lo,
                    double hi, bool lo_open, bool hi_open) {
    require(family, ParamRange{name, lo, hi, lo_open, hi_open, ""}, v);
}

} // namespace uqt::families::detail
