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

#include "qngm/linalg.hpp"

namespace qngm {

/**
 * @brief Full-support probability vector (p_1, ..., p_N).
 *
 * The free coordinates are the first N-1 probabilities; p_N = 1 - sum.
 */
class DiscreteDistribution {
  public:
    /// @throws DegenerateSupport if some p_i <= 0 or the sum differs from 1 by more than 1e-12.
    explicit DiscreteDistribution(RVector probs);

    /// Builds (theta_1, ..., theta_{N-1}, 1 - sum theta).
    static DiscreteDistribution from_free(const RVector &free);

    [[nodiscard]] const RVector &probs() const noexcept { return probs_; }
    [[nodiscard]] RVector free_coordinates() const { return probs_.head(probs_.size() - 1); }
    [[nodiscard]] Eigen::Index size() const noexcept { return probs_.size(); }

  private:
    RVector probs_;
};

/// (N-1)x(N-1) Fisher metric delta_ij / p_i + 1 / p_N in the free coordinates.
RMatrix classical_fisher(const DiscreteDistribution &dist);

/// sum_x p(x) ln(p(x) / q(x)).
double kl(const DiscreteDistribution &p, const DiscreteDistribution &q);

/// (1 / (alpha (alpha - 1))) ln sum p^alpha q^(1-alpha); KL when |alpha - 1| < 1e-6.
double renyi_classical(const DiscreteDistribution &p, const DiscreteDistribution &q,
                       double alpha);

} // namespace qngm
