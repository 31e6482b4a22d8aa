// Copyright 2026 The qngm Authors
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

#include "qngm/states.hpp"

namespace qngm {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream); used to make per-sample draws
/// independent of evaluation order.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// rows x cols matrix of standard complex Gaussians.
CMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng &rng);

/// Haar-distributed unitary of dimension d.
CMatrix haar_unitary(Eigen::Index d, Rng &rng);

/// Haar-distributed d_out x d_in isometry (d_out >= d_in).
CMatrix haar_isometry(Eigen::Index d_out, Eigen::Index d_in, Rng &rng);

/// (1 - mix) W W^dagger / Tr + mix I / d with W Ginibre; full rank for mix > 0.
DensityOperator random_density(Eigen::Index d, Rng &rng, double mix = 0.1);

/// Hermitian traceless matrix with unit Frobenius norm.
CMatrix random_tangent(Eigen::Index d, Rng &rng);

/// Normalized random ket.
CVector random_ket(Eigen::Index d, Rng &rng);

/// Point of the open simplex with every coordinate >= floor.
RVector random_simplex(Eigen::Index n, Rng &rng, double floor = 0.02);

} // namespace qngm
