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

#include "uqt/channels.hpp"

#include <cmath>
#include <string>

#include "uqt/hermitian_eig.hpp"

namespace uqt {

Mat4 choi_matrix(const KrausList &kraus) {
    const Vec4 phi = bell_vector(1);
    const Mat4 proj = phi * phi.adjoint();
    const Mat2 id = Mat2::Identity();
    Mat4 out = Mat4::Zero();
    for (const Mat2 &k : kraus) {
        const Mat4 op = tensor(id, k);
        out += op * proj * op.adjoint();
    }
    return out;
}

double completeness_residual(const KrausList &kraus) {
    Mat2 sum = Mat2::Zero();
    for (const Mat2 &k : kraus) sum += k.adjoint() * k;
    return (sum - Mat2::Identity()).cwiseAbs().maxCoeff();
}

double unitality_residual(const KrausList &kraus) {
    Mat2 sum = Mat2::Zero();
    for (const Mat2 &k : kraus) sum += k * k.adjoint();
    return (sum - Mat2::Identity()).cwiseAbs().maxCoeff();
}

QubitChannel validate(KrausList kraus, std::string name, ParamMap params) {
    const int n = static_cast<int>(kraus.size());
    if (n < 1 || n > kMaxKraus) {
        throw ValidationError(ValidationError::Kind::KrausCount, n,
                              "Kraus count must be in 1.." + std::to_string(kMaxKraus) +
                                  ", got " + std::to_string(n));
    }
    const double res = completeness_residual(kraus);
    if (res > tol::cptp) {
        throw ValidationError(ValidationError::Kind::Completeness, res,
                              "completeness violated: |sum K^dag K - I|_max = " +
                                  std::to_string(res));
    }
    const double lmin = hermitian_eig(choi_matrix(kraus)).eigenvalues.minCoeff();
    if (lmin < -tol::cptp) {
        throw ValidationError(ValidationError::Kind::ChoiNegative, lmin,
                              "Choi matrix not positive: min eigenvalue " + std::to_string(lmin));
    }
    return QubitChannel(std::move(kraus), std::move(name), std::move(params));
}

QubitChannel channel_from_choi(const Mat4 &choi, std::string name, ParamMap params) {
    const double herm = hermiticity_residual(choi);
    if (herm > tol::herm) {
        throw ValidationError(ValidationError::Kind::NotHermitian, herm,
                              "Choi matrix is not Hermitian");
    }
    const double tr = choi.trace().real();
    if (std::abs(tr - 1.0) > tol::trace) {
        throw ValidationError(ValidationError::Kind::Trace, tr,
                              "Choi matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    const auto d = hermitian_eig(choi);
    const double lmin = d.eigenvalues.minCoeff();
    if (lmin < -tol::cptp) {
        throw ValidationError(ValidationError::Kind::ChoiNegative, lmin,
                              "Choi matrix not positive: min eigenvalue " + std::to_string(lmin));
    }
    const double marg =
        (partial_trace(choi, 1) - Mat2::Identity() / 2.0).cwiseAbs().maxCoeff();
    if (marg > tol::cptp) {
        throw ValidationError(ValidationError::Kind::Completeness, marg,
                              "Choi matrix does not describe a trace-preserving map");
    }
    const double top = d.eigenvalues.maxCoeff();
    KrausList kraus;
    for (int i = 0; i < 4; ++i) {
        const double q = d.eigenvalues(i);
        if (q <= tol::rank * top) continue;
        Mat2 a;
        for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) a(m, n) = d.eigenvectors(2 * m + n, i);
        kraus.push_back(std::sqrt(2.0 * q) * a.transpose());
    }
    return validate(std::move(kraus), std::move(name), std::move(params));
}

Mat2 apply(const QubitChannel &ch, const Mat2 &x) {
    Mat2 out = Mat2::Zero();
    for (const Mat2 &k : ch.kraus()) out += k * x * k.adjoint();
    return out;
}

TwoQubitState apply_to_bob(const TwoQubitState &s, const QubitChannel &ch) {
    const Mat2 id = Mat2::Identity();
    Mat4 out = Mat4::Zero();
    for (const Mat2 &k : ch.kraus()) {
        const Mat4 op = tensor(id, k);
        out += op * s.rho() * op.adjoint();
    }
    return TwoQubitState::from_density(out);
}

TwoQubitState choi(const QubitChannel &ch) {
    return TwoQubitState::from_density(choi_matrix(ch.kraus()));
}

ChannelReport report(const QubitChannel &ch) {
    const TwoQubitState c = choi(ch);
    const double ures = unitality_residual(ch.kraus());
    return ChannelReport{ures <= tol::cptp, numeric_rank(c.rho()), c,
                         completeness_residual(ch.kraus()), ures};
}

QubitChannel rotate_kraus(const QubitChannel &ch, const Eigen::MatrixXcd &w) {
    const Eigen::Index n = w.rows();
    if (w.cols() != n || n < static_cast<Eigen::Index>(ch.kraus().size())) {
        throw DimensionError("rotate_kraus: mixing matrix must be square with size >= Kraus count");
    }
    const double res = (w.adjoint() * w - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (res > tol::herm) {
        throw ValidationError(ValidationError::Kind::NotUnitary, res,
                              "rotate_kraus: mixing matrix is not unitary");
    }
    KrausList padded = ch.kraus();
    padded.resize(static_cast<std::size_t>(n), Mat2::Zero());
    KrausList out(static_cast<std::size_t>(n), Mat2::Zero());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out[i] += w(i, j) * padded[j];
    return validate(std::move(out), ch.name(), ch.params());
}

QubitChannel orthogonalize(const QubitChannel &ch) {
    return channel_from_choi(choi_matrix(ch.kraus()), ch.name(), ch.params());
}

QubitChannel identity_channel() { return validate({Mat2::Identity()}, "identity"); }

} // namespace uqt
