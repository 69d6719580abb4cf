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

#include <array>
#include <optional>

#include <Eigen/Dense>

#include "uqt/linalg.hpp"

namespace uqt {

/// rho = 1/4 [ I + r.sigma x I + I x s.sigma + sum T_ij sigma_i x sigma_j ].
struct HSDecomposition {
    Eigen::Vector3d r = Eigen::Vector3d::Zero();
    Eigen::Vector3d s = Eigen::Vector3d::Zero();
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
};

HSDecomposition hs_decompose(const Mat4 &rho);
Mat4 hs_recompose(const HSDecomposition &hs);

class TwoQubitState {
  public:
    /// Validates Hermiticity, unit trace and positivity; stores the Hermitian part.
    static TwoQubitState from_density(const Mat4 &m);

    const Mat4 &rho() const noexcept { return rho_; }
    const HSDecomposition &hs() const noexcept { return hs_; }

  private:
    TwoQubitState(const Mat4 &rho, const HSDecomposition &hs) : rho_(rho), hs_(hs) {}

    Mat4 rho_;
    HSDecomposition hs_;
};

/// sqrt(a)|00> + sqrt(1-a)|11>, a in [1/2, 1).
TwoQubitState pure_state(double a);
/// Value of a giving concurrence c for the pure family above.
double pure_state_a_for_concurrence(double c);
TwoQubitState bell_state(int k);

double concurrence(const TwoQubitState &s);

struct CorrelationSpectrum {
    Eigen::Vector3d abs_t = Eigen::Vector3d::Zero(); // descending
    double det_t = 0.0;
    /// Signs aligned with abs_t; unset when T is not normal.
    std::optional<std::array<int, 3>> signs;
};

CorrelationSpectrum correlation_spectrum(const TwoQubitState &s);

struct TeleportProfile {
    std::optional<double> f_max;
    std::optional<double> delta;
    double det_t = 0.0;
    CorrelationSpectrum spectrum;
    bool formula_valid = false;
    bool useful = false;
    bool universal = false;
    bool uqt = false;
};

/// Singular values at or below this count as zero when deciding whether the
/// det(T) < 0 formulas apply.
inline constexpr double kZeroCorrelation = 1e-12;

TeleportProfile profile(const TwoQubitState &s);
TeleportProfile profile_from_spectrum(const CorrelationSpectrum &spec);

} // namespace uqt
