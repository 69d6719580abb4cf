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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uqt/channels.hpp"

/// Parametric channel generators and the family catalog.
namespace uqt::families {

struct ParamRange {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    bool lo_open = false;
    bool hi_open = false;
    std::string note;
};

struct FamilyInfo {
    std::string id;
    std::vector<ParamRange> params;
    std::string source; ///< human-readable origin, e.g. the noise-table row
    bool unital = false;
    int choi_rank = 0;  ///< rank at generic in-range parameters
    /// Parameter equal to the concurrence of the pure input the family is
    /// tuned for; empty when the family is not tuned to a pure input.
    std::string matched_param;
};

struct FamilySpec {
    std::string family_id;
    ParamMap params;
};

const std::vector<FamilyInfo> &catalog();
const FamilyInfo &info(const std::string &id);
bool is_noise_family(const std::string &id);

/// Builds any catalog family. Unknown ids and out-of-range or unknown
/// parameters raise RangeError naming the documented range.
QubitChannel make(const FamilySpec &spec);
/// make() restricted to the physical noise rows and named examples.
QubitChannel noise_channel(const FamilySpec &spec);

std::string format_range(const ParamRange &r);

// -- Pauli-type and unital families -----------------------------------------

QubitChannel pauli_mixture(double p0, double p1, double p2, double p3);
/// sqrt(p) I, sqrt((1-p)/3) sigma_i.
QubitChannel werner(double p);
/// sqrt(p) I, sqrt(1-p) sigma_3.
QubitChannel dephasing(double p);
/// Pauli mixture with p1 = p2 = (1 + (1 - 2 p0) c) / (4 + 2 c); requires
/// (1 + 2c)/(6c) < p0 <= 1/(2 - c) and 1/2 < c < 1.
QubitChannel uqt_unital_for_pure(double c, double p0);
/// Pauli weights (2/3, w, w, (2p-1)/(3(2+p))); the last is negative for p < 1/2.
std::array<double, 4> lambda_u4_weights(double p);
QubitChannel lambda_u4(double p);
QubitChannel lambda_u2(double p);
/// Choi matrix of the (possibly non-CP) map x -> sum_i w_i sigma_i x sigma_i.
Mat4 pauli_map_choi(const std::array<double, 4> &w);

// -- Non-unital families whose Choi state keeps |t_ii| = t ------------------

/// Canonical Choi matrix with t_ii = -t and Bob vector s.
Mat4 uqt_choi_matrix(const Eigen::Vector3d &s, double t);
/// Closed-form eigenvalues q0 > q1 > q2 > q3 of uqt_choi_matrix.
Eigen::Vector4d uqt_choi_eigenvalues(const Eigen::Vector3d &s, double t);
/// 1/3 < t < 1, 0 < |s| < 1 - t. Built from the eigendecomposition.
QubitChannel uqt_nonunital_rank4(const Eigen::Vector3d &s, double t);
/// s = (1 - t)(sin th cos ph, sin th sin ph, cos th), 1/3 < t < 1.
QubitChannel uqt_nonunital_rank3(double theta, double phi, double t);
Eigen::Vector3d rank3_bloch(double theta, double phi, double t);
/// Published component forms; singular on the s3 axis.
KrausList rank4_closed_form(const Eigen::Vector3d &s, double t);
KrausList rank3_closed_form(double theta, double phi, double t);

// -- Named examples ---------------------------------------------------------

/// {sqrt(1-p)|0><0|, sqrt(1-p)|0><1|, sqrt(p) I}, 0 < p < 1.
QubitChannel example_rank3(double p);
QubitChannel example_rank3_universal_only();
QubitChannel example_rank4();
QubitChannel gadc(double gamma, double n);
double lambda_tilde_p2_max(double p1);
QubitChannel lambda_tilde_nu(double p1, double p2);
double lambda_star_gamma(double p1);
QubitChannel lambda_star_nu(double p1);

// -- Physical noise rows ----------------------------------------------------

double p_adc_m(double gamma, double t);
double p_pln_m(double g_big, double t);
double p_oun_m(double g_big, double t);
double p_adc_nm(double r, double gamma, double omega0, double g, double t);
double p_pln_nm(double g_big, double g, double t);
double p_oun_nm(double g_big, double g, double t);
double p_rtn_nm(double g, double omega, double t);

/// sqrt(1-p) I, sqrt(p/3) sigma_i.
QubitChannel depolarizing_m(double p);
/// sqrt(1-p) I, sqrt(p) sigma_3 (shared by the PLN, OUN and RTN rows).
QubitChannel dephasing_m(double p);
QubitChannel amplitude_damping(double p);
QubitChannel unruh(double r);
QubitChannel depolarizing_nm(double alpha, double p);
QubitChannel dephasing_nm(double alpha, double p);

} // namespace uqt::families
