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
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "uqt/states.hpp"

/// Independent numerical path: explicit three-qubit simulation of the
/// standard teleportation protocol and Haar quadrature of its fidelity.
namespace uqt::oracle {

struct QuadratureSpec {
    int n_theta = 64;            ///< Gauss-Legendre nodes in cos(theta)
    int n_phi = 64;              ///< uniform nodes in phi
    std::optional<int> mc_samples; ///< Monte Carlo mode when set
    std::uint64_t seed = 0;
};

struct QuadratureRule {
    std::vector<double> theta;
    std::vector<double> phi;
    std::vector<double> weight; ///< sums to 1
};

struct NumericMoments {
    double mean_f = 0.0;
    double second_f = 0.0;
    double delta = 0.0;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double> &x, std::vector<double> &w);
QuadratureRule quadrature_rule(const QuadratureSpec &q);

Mat2 bloch_density(const Eigen::Vector3d &n);
Eigen::Vector3d bloch_vector(double theta, double phi);

/// Corrections {I, s1, s3 s1, s3} for Bell outcomes 1..4.
Mat2 correction(int outcome);

/// Output of the standard protocol for the pure input with Bloch vector n.
Mat2 teleport_output(const TwoQubitState &shared, const Eigen::Vector3d &n);
double teleport_fidelity(const TwoQubitState &shared, const Eigen::Vector3d &n);

NumericMoments numeric_moments(const TwoQubitState &shared, const QuadratureSpec &q = {});

/// O with U sigma_j U^dag = sum_i O_ij sigma_i.
Eigen::Matrix3d rotation_from_su2(const Mat2 &u);
/// Inverse of rotation_from_su2 up to global sign; o must be proper.
Mat2 su2_from_rotation(const Eigen::Matrix3d &o);

struct Canonical {
    TwoQubitState state;
    Mat2 u1; ///< Alice
    Mat2 u2; ///< Bob
};

/// Local unitaries making T diagonal with the det-based sign rule: det <= 0
/// gives all nonzero entries negative; det > 0 gives the two largest
/// magnitudes negative and the smallest positive.
Canonical canonicalize(const TwoQubitState &s);

/// The protocol's corrections are matched to Phi1 (T = diag(1, -1, 1)); the
/// canonical form is singlet-like. sigma_2 on Alice maps one to the other.
TwoQubitState align_to_protocol(const TwoQubitState &canonical);

/// Moments of the optimal standard protocol: canonicalize, align, integrate.
NumericMoments optimal_moments(const TwoQubitState &s, const QuadratureSpec &q = {});

double pairwise_sum(const std::vector<double> &v);

} // namespace uqt::oracle
