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

#include <cmath>
#include <string>

#include "family_detail.hpp"

namespace uqt::families {

using detail::kInf;
using detail::require;

double p_adc_m(double gamma, double t) { return 1.0 - std::exp(-gamma * t); }

double p_pln_m(double g_big, double t) { return std::exp(-g_big * t); }

double p_oun_m(double g_big, double t) { return std::exp(-g_big * t / 2.0); }

double p_adc_nm(double r, double gamma, double omega0, double g, double t) {
    if (t == 0.0) return 0.0;
    const double coth = 1.0 / std::tanh(g * omega0 * t / 2.0);
    return 1.0 - std::exp(-2.0 * r * gamma / (omega0 * coth + 1.0));
}

double p_pln_nm(double g_big, double g, double t) {
    const double gt1 = g * t + 1.0;
    return std::exp(-g_big * t * (g * t + 2.0) / (2.0 * gt1 * gt1));
}

double p_oun_nm(double g_big, double g, double t) {
    return std::exp(-g_big * ((std::exp(-g * t) - 1.0) / g + t) / 2.0);
}

double p_rtn_nm(double g, double omega, double t) {
    return std::exp(-g * t) * (std::cos(g * omega * t) + std::sin(g * omega * t) / omega);
}

namespace {

QubitChannel weighted_pauli(const std::array<double, 4> &w, std::string name, ParamMap params) {
    KrausList k;
    for (int i = 0; i < 4; ++i) {
        if (w[static_cast<std::size_t>(i)] == 0.0 && i > 0) continue;
        k.push_back(std::sqrt(w[static_cast<std::size_t>(i)]) * pauli(i));
    }
    return validate(std::move(k), std::move(name), std::move(params));
}

} // namespace

QubitChannel depolarizing_m(double p) {
    require("depolarizing_m", "p", p, 0.0, 1.0, false, false);
    return weighted_pauli({1.0 - p, p / 3.0, p / 3.0, p / 3.0}, "depolarizing_m", {{"p", p}});
}

QubitChannel dephasing_m(double p) {
    require("dephasing_m", "p", p, 0.0, 1.0, false, false);
    return validate({std::sqrt(1.0 - p) * pauli(0), std::sqrt(p) * pauli(3)}, "dephasing_m",
                    {{"p", p}});
}

QubitChannel amplitude_damping(double p) {
    require("adc", "p", p, 0.0, 1.0, false, false);
    Mat2 m0 = Mat2::Zero(), m1 = Mat2::Zero();
    m0(0, 0) = 1.0;
    m0(1, 1) = std::sqrt(1.0 - p);
    m1(0, 1) = std::sqrt(p);
    return validate({m0, m1}, "adc", {{"p", p}});
}

QubitChannel unruh(double r) {
    require("unruh", "r", r, 0.0, M_PI / 4.0, true, false);
    Mat2 m0 = Mat2::Zero(), m1 = Mat2::Zero();
    m0(0, 0) = std::cos(r);
    m0(1, 1) = 1.0;
    m1(1, 0) = std::sin(r);
    return validate({m0, m1}, "unruh", {{"r", r}});
}

QubitChannel depolarizing_nm(double alpha, double p) {
    require("depolarizing_nm", "alpha", alpha, 0.0, 1.0, true, false);
    require("depolarizing_nm", "p", p, 0.0, std::min(0.5, 1.0 / (3.0 * alpha)), false, false);
    const double w0 = (1.0 - 3.0 * alpha * p) * (1.0 - p);
    const double wi = (1.0 + 3.0 * alpha * (1.0 - p)) * p / 3.0;
    return weighted_pauli({w0, wi, wi, wi}, "depolarizing_nm", {{"alpha", alpha}, {"p", p}});
}

QubitChannel dephasing_nm(double alpha, double p) {
    require("dephasing_nm", "alpha", alpha, 0.0, 1.0, true, false);
    require("dephasing_nm", "p", p, 0.0, 0.5, false, false);
    const double w0 = (1.0 - alpha * p) * (1.0 - p);
    const double w3 = p * (1.0 + alpha * (1.0 - p));
    return validate({std::sqrt(w0) * pauli(0), std::sqrt(w3) * pauli(3)}, "dephasing_nm",
                    {{"alpha", alpha}, {"p", p}});
}

} // namespace uqt::families
