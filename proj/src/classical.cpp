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

#include "qngm/classical.hpp"

#include <cmath>

namespace qngm {

namespace {

constexpr double kSumTol = 1e-12;
constexpr double kRenyiLimitTol = 1e-6;

void require_same_size(const DiscreteDistribution &p, const DiscreteDistribution &q) {
    if (p.size() != q.size()) {
        throw ShapeMismatch("distributions have different sizes " + std::to_string(p.size()) +
                            " and " + std::to_string(q.size()));
    }
}

} // namespace

DiscreteDistribution::DiscreteDistribution(RVector probs) : probs_(std::move(probs)) {
    if (probs_.size() < 2) {
        throw ShapeMismatch("DiscreteDistribution: need at least two outcomes");
    }
    if (!probs_.allFinite() || (probs_.array() <= 0.0).any()) {
        throw DegenerateSupport("DiscreteDistribution: every probability must be positive");
    }
    if (std::abs(probs_.sum() - 1.0) > kSumTol) {
        throw DegenerateSupport("DiscreteDistribution: probabilities sum to " +
                                std::to_string(probs_.sum()));
    }
}

DiscreteDistribution DiscreteDistribution::from_free(const RVector &free) {
    RVector p(free.size() + 1);
    p.head(free.size()) = free;
    p(free.size()) = 1.0 - free.sum();
    return DiscreteDistribution(std::move(p));
}

RMatrix classical_fisher(const DiscreteDistribution &dist) {
    const RVector &p = dist.probs();
    const Eigen::Index n = p.size() - 1;
    RMatrix g = RMatrix::Constant(n, n, 1.0 / p(n));
    g.diagonal().array() += p.head(n).array().inverse();
    return g;
}

double kl(const DiscreteDistribution &p, const DiscreteDistribution &q) {
    require_same_size(p, q);
    const auto &a = p.probs().array();
    const auto &b = q.probs().array();
    return (a * (a / b).log()).sum();
}

double renyi_classical(const DiscreteDistribution &p, const DiscreteDistribution &q,
                       double alpha) {
    require_same_size(p, q);
    if (std::abs(alpha - 1.0) < kRenyiLimitTol) {
        return kl(p, q);
    }
    if (alpha == 0.0) {
        throw DomainError("renyi_classical: alpha = 0 is excluded");
    }
    const auto &a = p.probs().array();
    const auto &b = q.probs().array();
    const double s = (a.pow(alpha) * b.pow(1.0 - alpha)).sum();
    return std::log(s) / (alpha * (alpha - 1.0));
}

} // namespace qngm
