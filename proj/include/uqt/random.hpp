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
#include <random>

#include <Eigen/Dense>

#include "uqt/channels.hpp"

namespace uqt::random {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
/// Independent stream for work item `index` under `seed`.
Rng stream(std::uint64_t seed, std::uint64_t index);

Eigen::MatrixXcd ginibre(Rng &rng, int rows, int cols);
Eigen::MatrixXcd haar_unitary(Rng &rng, int n);
Mat2 haar_unitary2(Rng &rng);

Vec4 random_pure(Rng &rng);
/// G G^dag / Tr with G a 4 x rank Ginibre matrix.
TwoQubitState random_state(Rng &rng, int rank = 4);
Mat4 random_hermitian(Rng &rng);

/// Random channel with `count` Kraus operators cut from a Haar isometry.
QubitChannel random_channel(Rng &rng, int count);

/// Random trace-1 PSD matrix of the given rank with exact Alice marginal I/2.
Mat4 random_choi(Rng &rng, int rank);

} // namespace uqt::random
