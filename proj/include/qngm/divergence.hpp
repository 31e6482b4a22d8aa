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

#include <functional>
#include <optional>
#include <variant>

#include "qngm/classical.hpp"
#include "qngm/petz.hpp"
#include "qngm/states.hpp"

namespace qngm {

struct QuantumKL {};

/// (1 / (alpha (alpha - 1))) ln Tr[rho_bar^alpha rho^(1 - alpha)].
struct StandardRenyi {
    double alpha;
};

/// (1 / (alpha (alpha - 1))) ln Tr[(rho^s rho_bar rho^s)^alpha], s = (1 - alpha) / (2 alpha).
struct SandwichedRenyi {
    double alpha;
};

/// sum_ij p_i F(pbar_j / p_i) |<psibar_j|psi_i>|^2 with F(1) = 0.
struct FDivergence {
    std::function<double(double)> F;
};

using DivergenceKind = std::variant<QuantumKL, StandardRenyi, SandwichedRenyi, FDivergence>;

/**
 * @brief D(rho_bar || rho) for full-rank states.
 *
 * Renyi kinds with |alpha - 1| < 1e-6 evaluate the quantum KL divergence.
 *
 * @throws RankDeficient if either smallest eigenvalue is below 1e-12.
 * @throws NumericalError if the trace has an imaginary residue above 1e-10.
 */
double divergence(const DivergenceKind &kind, const DensityOperator &rho_bar,
                  const DensityOperator &rho);

/// F_alpha(t) = 4 / (1 - alpha^2) (1 - t^((1 + alpha) / 2)); t ln t at 1, -ln t at -1.
double f_alpha(double alpha, double t);

/**
 * @brief Max relative violation of F(t) + t F(1/t) = (1 - t)^2 / f(t) on the
 * default log grid, with F = F_alpha and f = st((1 + alpha) / 2).
 */
double f_divergence_consistency(double alpha);

/// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityOperator &rho, const DensityOperator &sigma);
double bures_angle(const DensityOperator &rho, const DensityOperator &sigma);
double bures_distance(const DensityOperator &rho, const DensityOperator &sigma);
/// arccos sqrt(|<psi|phi>|^2 / (<psi|psi> <phi|phi>)).
double fubini_study(const CVector &psi, const CVector &phi);

/// D(rho_bar, rho) as a callable on two states.
using StateDivergence = std::function<double(const DensityOperator &, const DensityOperator &)>;

/**
 * @brief Second derivatives of Delta -> D(x + Delta, x) at Delta = 0.
 *
 * `displaced` returns the divergence of the displaced point from the base
 * point. Centred stencils in the first argument give O(h^2) accuracy.
 */
RMatrix fd_hessian(const std::function<double(const RVector &)> &displaced, Eigen::Index n,
                   double h);

/// Hessian of theta_bar -> D(rho(theta_bar) || rho(theta)) at theta_bar = theta.
RMatrix fd_hessian(const StateDivergence &d, const StateMap &state, const RVector &theta,
                   double h);

RMatrix fd_hessian(const DivergenceKind &kind, const StateMap &state, const RVector &theta,
                   double h);

/// Hessian on a circuit state mixed with identity by `delta`.
RMatrix fd_hessian(const DivergenceKind &kind, const CircuitState &circuit,
                   const RVector &theta, double h, double delta = 0.0);

using ClassicalDivergence =
    std::function<double(const DiscreteDistribution &, const DiscreteDistribution &)>;

/// Hessian in the free coordinates of p_bar -> D(p_bar || p) at p_bar = p.
RMatrix fd_hessian(const ClassicalDivergence &d, const DiscreteDistribution &p, double h);

/**
 * @brief Divergence whose Hessian at coincidence is the metric of f.
 *
 * Sandwiched-family functions (including SLD, rRLD and Half) pair with
 * SandwichedRenyi, Standard with StandardRenyi, BKM with QuantumKL. Other
 * functions yield nullopt.
 */
std::optional<DivergenceKind> hessian_divergence(const PetzFunction &f);

/// Squared Bures distance as a StateDivergence.
double bures_distance_squared(const DensityOperator &rho_bar, const DensityOperator &rho);

} // namespace qngm
