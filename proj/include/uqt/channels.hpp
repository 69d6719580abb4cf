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

#include <map>
#include <string>
#include <vector>

#include "uqt/linalg.hpp"
#include "uqt/states.hpp"

namespace uqt {

using ParamMap = std::map<std::string, double>;
using KrausList = std::vector<Mat2>;

inline constexpr int kMaxKraus = 8;

class QubitChannel;

/// Throws ValidationError (Completeness with the residual, ChoiNegative with
/// the minimum eigenvalue, KrausCount).
QubitChannel validate(KrausList kraus, std::string name = "", ParamMap params = {});

/// A validated CPTP qubit map. Construct through validate() or
/// channel_from_choi().
class QubitChannel {
  public:
    const KrausList &kraus() const noexcept { return kraus_; }
    const std::string &name() const noexcept { return name_; }
    const ParamMap &params() const noexcept { return params_; }

  private:
    QubitChannel(KrausList k, std::string name, ParamMap params)
        : kraus_(std::move(k)), name_(std::move(name)), params_(std::move(params)) {}

    friend QubitChannel validate(KrausList, std::string, ParamMap);

    KrausList kraus_;
    std::string name_;
    ParamMap params_;
};

/// Trace-1 Choi matrix (I x L)|Phi1><Phi1| of an arbitrary operator list.
Mat4 choi_matrix(const KrausList &kraus);

/// Sum_i K_i^dag K_i - I, max-abs entry.
double completeness_residual(const KrausList &kraus);
/// Sum_i K_i K_i^dag - I, max-abs entry.
double unitality_residual(const KrausList &kraus);

/// Minimal orthogonal Kraus set rebuilt from a trace-1 Choi matrix.
/// Throws ValidationError when the matrix is not a CPTP Choi matrix.
QubitChannel channel_from_choi(const Mat4 &choi, std::string name = "", ParamMap params = {});

Mat2 apply(const QubitChannel &ch, const Mat2 &x);
TwoQubitState apply_to_bob(const TwoQubitState &s, const QubitChannel &ch);
TwoQubitState choi(const QubitChannel &ch);

struct ChannelReport {
    bool unital = false;
    int choi_rank = 0;
    TwoQubitState choi;
    double trace_preserving_residual = 0.0;
    double unitality_residual = 0.0;
};

ChannelReport report(const QubitChannel &ch);

/// K'_i = sum_j W_ij K_j. The Kraus list is padded with zeros up to W's size.
QubitChannel rotate_kraus(const QubitChannel &ch, const Eigen::MatrixXcd &w);

/// Kraus set of size choi_rank with Tr(K_i^dag K_j) = 2 q_i delta_ij, q_i the
/// Choi eigenvalues.
QubitChannel orthogonalize(const QubitChannel &ch);

QubitChannel identity_channel();

} // namespace uqt
