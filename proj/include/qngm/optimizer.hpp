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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qngm/petz.hpp"
#include "qngm/states.hpp"

namespace qngm {

/// L = Tr[(rho(theta) - rho(target))^dagger (rho(theta) - rho(target))].
struct StateDistanceCost {
    RVector target;
};

/// L = Tr[rho(theta) H].
struct ObservableCost {
    CMatrix observable;
};

using CostFunction = std::variant<StateDistanceCost, ObservableCost>;

struct CostValue {
    double value;
    RVector gradient;
};

CostValue cost_and_gradient(const CostFunction &cost, const CircuitState &circuit,
                            const RVector &theta);

/// Same as above with rho(theta) and its derivatives already evaluated.
CostValue cost_and_gradient(const CostFunction &cost, const CircuitState &circuit,
                            const CMatrix &rho, const std::vector<CMatrix> &derivatives);

struct Step {
    RVector delta;
    /// First-order change of the cost, grad . delta.
    double predicted_change = 0.0;
    /// Set when the gradient is exactly zero and no step was taken.
    bool converged = false;
};

/// delta = -sqrt(2 epsilon / (g^T G^-1 g)) G^-1 g, so delta^T G delta = 2 epsilon.
Step step_trust(const RMatrix &metric, const RVector &grad, double epsilon);

/// delta = -eta G^-1 g.
Step step_lr(const RMatrix &metric, const RVector &grad, double eta);

enum class UpdateRule { Trust, LearningRate };

struct OptimizerSettings {
    PetzFunction metric = PetzFunction::sld();
    UpdateRule rule = UpdateRule::Trust;
    double epsilon = 1e-6;
    double eta = 1e-3;
    double delta = 1e-3;
    double xi = 1e-3;
    double rank_tol = 1e-9;
    int max_steps = 2000;
    double grad_tol = 1e-10;
    bool diagonal = false;
    /// Stop, without recording it, at the first step that raises the cost.
    bool stall_stop = true;
};

struct TrajectoryRecord {
    int step;
    RVector theta;
    double cost;
    double grad_norm;
    double metric_condition;
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;
    /// One of "converged", "max_steps", "stalled", "error".
    std::string stop_reason;
    /// Error category and message when stop_reason is "error".
    std::string error_category;
    std::string error_message;

    [[nodiscard]] bool failed() const { return stop_reason == "error"; }
};

/**
 * @brief Natural-gradient descent from theta0.
 *
 * Each step evaluates rho(theta), mixes it with identity by `delta` for the
 * metric, assembles and regularizes the metric, and applies the update rule.
 * Errors stop the run and are reported in the returned trajectory.
 */
Trajectory minimize(const CircuitState &circuit, const CostFunction &cost, const RVector &theta0,
                    const OptimizerSettings &settings);

} // namespace qngm
