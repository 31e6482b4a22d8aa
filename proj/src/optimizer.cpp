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

#include "qngm/optimizer.hpp"

#include <cmath>

#include "qngm/qfim.hpp"

namespace qngm {

namespace {

void require_positive(double x, const char *what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(what) + " must be positive");
    }
}

} // namespace

CostValue cost_and_gradient(const CostFunction &cost, const CircuitState &circuit,
                            const CMatrix &rho, const std::vector<CMatrix> &derivatives) {
    const auto n = static_cast<Eigen::Index>(derivatives.size());
    CostValue out{0.0, RVector(n)};
    if (const auto *sd = std::get_if<StateDistanceCost>(&cost)) {
        const CMatrix diff = rho - circuit.evaluate_matrix(sd->target);
        out.value = diff.squaredNorm();
        for (Eigen::Index k = 0; k < n; ++k) {
            out.gradient(k) =
                2.0 * (diff.adjoint() * derivatives[static_cast<std::size_t>(k)]).trace().real();
        }
        return out;
    }
    const CMatrix &h = std::get<ObservableCost>(cost).observable;
    if (h.rows() != rho.rows() || h.cols() != rho.cols()) {
        throw ShapeMismatch("observable dimension does not match the state");
    }
    out.value = (rho * h).trace().real();
    for (Eigen::Index k = 0; k < n; ++k) {
        out.gradient(k) = (derivatives[static_cast<std::size_t>(k)] * h).trace().real();
    }
    return out;
}

CostValue cost_and_gradient(const CostFunction &cost, const CircuitState &circuit,
                            const RVector &theta) {
    if (const auto *obs = std::get_if<ObservableCost>(&cost)) {
        require_hermitian(obs->observable, "observable");
    }
    return cost_and_gradient(cost, circuit, circuit.evaluate_matrix(theta),
                             circuit.derivatives(theta));
}

Step step_trust(const RMatrix &metric, const RVector &grad, double epsilon) {
    require_positive(epsilon, "epsilon");
    Step s;
    if (grad.isZero(0.0)) {
        s.delta = RVector::Zero(grad.size());
        s.converged = true;
        return s;
    }
    const RVector nat = solve_sym(metric, grad);
    const double quad = grad.dot(nat);
    if (!(quad > 0.0)) {
        throw NumericalError("step_trust: g^T G^-1 g is not positive");
    }
    s.delta = -std::sqrt(2.0 * epsilon / quad) * nat;
    s.predicted_change = -std::sqrt(2.0 * epsilon * quad);
    return s;
}

Step step_lr(const RMatrix &metric, const RVector &grad, double eta) {
    require_positive(eta, "eta");
    Step s;
    if (grad.isZero(0.0)) {
        s.delta = RVector::Zero(grad.size());
        s.converged = true;
        return s;
    }
    const RVector nat = solve_sym(metric, grad);
    s.delta = -eta * nat;
    s.predicted_change = -eta * grad.dot(nat);
    return s;
}

Trajectory minimize(const CircuitState &circuit, const CostFunction &cost, const RVector &theta0,
                    const OptimizerSettings &settings) {
    Trajectory traj;
    RVector theta = theta0;
    double previous_cost = std::numeric_limits<double>::infinity();
    try {
        if (const auto *obs = std::get_if<ObservableCost>(&cost)) {
            require_hermitian(obs->observable, "observable");
        }
        for (int step = 0;; ++step) {
            const CMatrix rho = circuit.evaluate_matrix(theta);
            std::vector<CMatrix> ders = circuit.derivatives(theta);
            const CostValue cv = cost_and_gradient(cost, circuit, rho, ders);
            if (settings.stall_stop && cv.value > previous_cost) {
                traj.stop_reason = "stalled";
                break;
            }
            previous_cost = cv.value;

            const DensityOperator rho_reg =
                regularize_state(DensityOperator(rho), settings.delta);
            for (CMatrix &d : ders) {
                d *= 1.0 - settings.delta;
            }
            RMatrix g = metric(rho_reg, ders, settings.metric, settings.rank_tol);
            if (settings.diagonal) {
                g = diagonal(g);
            }
            g = regularize_metric(g, settings.xi);

            const double grad_norm = cv.gradient.norm();
            traj.records.push_back({step, theta, cv.value, grad_norm, condition_number(g)});
            if (grad_norm < settings.grad_tol) {
                traj.stop_reason = "converged";
                break;
            }
            if (step >= settings.max_steps) {
                traj.stop_reason = "max_steps";
                break;
            }
            const Step s = settings.rule == UpdateRule::Trust
                               ? step_trust(g, cv.gradient, settings.epsilon)
                               : step_lr(g, cv.gradient, settings.eta);
            if (s.converged) {
                traj.stop_reason = "converged";
                break;
            }
            theta += s.delta;
        }
    } catch (const Error &e) {
        traj.stop_reason = "error";
        traj.error_category = e.category();
        traj.error_message = e.what();
    }
    return traj;
}

} // namespace qngm
