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

#include <catch_amalgamated.hpp>

#include "qngm/linalg.hpp"
#include "qngm/random.hpp"

namespace qngm::test {

/// Frobenius-norm relative error of `got` against `want`.
template <typename A, typename B> double rel_error(const A &got, const B &want) {
    return (got - want).norm() / std::max(want.norm(), 1e-300);
}

/// Random Hermitian matrix with entries of order one.
inline CMatrix random_hermitian(Eigen::Index d, Rng &rng) {
    const CMatrix g = random_ginibre(d, d, rng);
    return (g + g.adjoint()) / 2.0;
}

} // namespace qngm::test
