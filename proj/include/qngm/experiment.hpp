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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qngm/optimizer.hpp"

namespace qngm {

/**
 * @brief Everything needed to reproduce one benchmark run or alpha sweep.
 *
 * Defaults are the single-qubit benchmark hyperparameters.
 */
struct ExperimentConfig {
    /// single-qubit | two-qubit | three-qubit-heisenberg | custom
    std::string experiment = "single-qubit";
    std::string metric = "sld";
    UpdateRule rule = UpdateRule::Trust;
    double epsilon = 1e-6;
    double eta = 1e-3;
    double delta = 1e-3;
    double xi = 1e-3;
    double rank_tol = 1e-9;
    int steps = 2000;
    double grad_tol = 1e-10;
    std::uint64_t seed = 0;
    std::string out = "trajectory.csv";
    bool diagonal = false;
    bool stall_stop = true;
    std::vector<double> sweep_alpha;

    /// Empty means the experiment default.
    std::vector<double> theta0;
    std::vector<double> theta_star;
    std::vector<std::array<double, 3>> bloch;
    double omega = 1.0;
    double coupling = 1.0;

    /// Custom experiments only.
    int qubits = 1;
    std::string circuit;
    /// distance | observable
    std::string cost = "distance";
    std::string observable;
};

/// One `key = value` assignment and where it came from, for error messages.
struct ConfigEntry {
    std::string key;
    std::string value;
    std::string origin;
};

/// Parses flat `key = value` text with `#` comments.
/// @throws ParseError naming the offending line.
std::vector<ConfigEntry> parse_config_text(const std::string &text, const std::string &origin);

/// @throws ParseError if the file cannot be read or parsed.
std::vector<ConfigEntry> read_config_file(const std::string &path);

/**
 * @brief Builds a validated config; later entries override earlier ones.
 *
 * If no entry sets `seed`, the QNGM_SEED environment variable is used.
 *
 * @throws ParseError for unknown keys or malformed values.
 * @throws ValidationError listing every range violation.
 */
ExperimentConfig load_config(const std::vector<ConfigEntry> &entries);
ExperimentConfig load_config(const std::string &path);

/// Names accepted by load_config.
const std::vector<std::string> &config_keys();

struct ExperimentSetup {
    CircuitState circuit;
    CostFunction cost;
    RVector theta0;
};

ExperimentSetup build_setup(const ExperimentConfig &config);

OptimizerSettings optimizer_settings(const ExperimentConfig &config, const PetzFunction &metric);

/// Runs the configured (non-sweep) experiment.
Trajectory run(const ExperimentConfig &config);

/// The Petz functions a config runs: its metric, or one per sweep value.
std::vector<PetzFunction> sweep_metrics(const ExperimentConfig &config);

/// `out` with `_<tag>` inserted before the extension, tag derived from f.
std::string sweep_output_path(const std::string &out, const PetzFunction &f);

/// CSV with header `step,cost,grad_norm,metric_cond` and 17 significant digits.
std::string trajectory_csv(const Trajectory &traj);

struct RunSummary {
    std::string metric;
    std::string path;
    Trajectory trajectory;
    double seconds = 0.0;
};

/**
 * @brief Runs the experiment, or each sweep member concurrently, and writes
 * one CSV per run. A summary line per run goes to `log`.
 */
std::vector<RunSummary> run_experiment(const ExperimentConfig &config, std::ostream &log);

} // namespace qngm
