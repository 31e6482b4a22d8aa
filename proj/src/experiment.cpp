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

#include "qngm/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <numbers>
#include <ostream>
#include <sstream>

namespace qngm {

namespace {

std::vector<std::string> split_trimmed(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) {
        const auto a = part.find_first_not_of(" \t");
        if (a == std::string::npos) {
            continue;
        }
        const auto b = part.find_last_not_of(" \t");
        out.push_back(part.substr(a, b - a + 1));
    }
    return out;
}

int to_index(const std::string &token, const std::string &context) {
    char *end = nullptr;
    const long v = std::strtol(token.c_str(), &end, 10);
    if (token.empty() || end != token.c_str() + token.size() || v < 0 || v > 1000) {
        throw ParseError("circuit: bad index '" + token + "' in '" + context + "'");
    }
    return static_cast<int>(v);
}

CircuitState parse_circuit(const std::string &spec, int n_qubits, const DensityOperator &initial) {
    std::vector<Gate> gates;
    int n_params = 0;
    auto use_param = [&n_params](int p) { n_params = std::max(n_params, p + 1); };
    for (const std::string &gate : split_trimmed(spec, ';')) {
        const auto tok = split_trimmed(gate, ':');
        const std::string &name = tok.front();
        auto arg = [&](std::size_t i) { return to_index(tok.at(i), gate); };
        if ((name == "rz" || name == "ry") && tok.size() == 3) {
            use_param(arg(2));
            if (name == "rz") {
                gates.emplace_back(RotationZ{arg(1), arg(2)});
            } else {
                gates.emplace_back(RotationY{arg(1), arg(2)});
            }
        } else if (name == "r3" && tok.size() == 5) {
            append_r3(gates, arg(1), arg(2), arg(3), arg(4));
            use_param(arg(2));
            use_param(arg(3));
            use_param(arg(4));
        } else if (name == "cnot" && tok.size() == 3) {
            gates.emplace_back(Cnot{arg(1), arg(2)});
        } else {
            throw ParseError("circuit: cannot parse gate '" + gate +
                             "' (expected rz:w:p, ry:w:p, r3:w:p1:p2:p3 or cnot:c:t)");
        }
    }
    if (gates.empty()) {
        throw ValidationError("circuit: custom experiment needs at least one gate");
    }
    return CircuitState(n_qubits, initial, std::move(gates), n_params);
}

CMatrix parse_observable(const std::string &spec, int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    CMatrix h = CMatrix::Zero(dim, dim);
    const auto terms = split_trimmed(spec, ';');
    if (terms.empty()) {
        throw ValidationError("observable: custom observable cost needs at least one term");
    }
    for (const std::string &term : terms) {
        const auto parts = split_trimmed(term, ' ');
        double coef = 1.0;
        std::string ops;
        if (parts.size() == 2) {
            char *end = nullptr;
            coef = std::strtod(parts[0].c_str(), &end);
            if (end != parts[0].c_str() + parts[0].size()) {
                throw ParseError("observable: bad coefficient in '" + term + "'");
            }
            ops = parts[1];
        } else if (parts.size() == 1) {
            ops = parts[0];
        } else {
            throw ParseError("observable: expected '<coef> <paulis>' in '" + term + "'");
        }
        if (static_cast<int>(ops.size()) != n_qubits) {
            throw ShapeMismatch("observable: '" + ops + "' does not act on " +
                                std::to_string(n_qubits) + " qubits");
        }
        h += coef * pauli_string(ops);
    }
    return h;
}

RVector to_vector(const std::vector<double> &v) {
    return Eigen::Map<const RVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

RVector repeated_start(int n_qubits) {
    constexpr double pi = std::numbers::pi;
    RVector theta(3 * n_qubits);
    for (int q = 0; q < n_qubits; ++q) {
        theta.segment(3 * q, 3) << pi / 2.0, pi / 2.0, pi / 4.0;
    }
    return theta;
}

std::string format_float(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ValidationError("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw ValidationError("failed writing '" + path + "'");
    }
}

} // namespace

ExperimentSetup build_setup(const ExperimentConfig &c) {
    int n_qubits = 1;
    if (c.experiment == "two-qubit") {
        n_qubits = 2;
    } else if (c.experiment == "three-qubit-heisenberg") {
        n_qubits = 3;
    } else if (c.experiment == "custom") {
        n_qubits = c.qubits;
    } else if (c.experiment != "single-qubit") {
        throw ValidationError("unknown experiment '" + c.experiment + "'");
    }

    std::vector<std::array<double, 3>> bloch = c.bloch;
    if (bloch.empty()) {
        bloch.assign(static_cast<std::size_t>(n_qubits), {0.5, 0.0, 0.0});
    }
    if (static_cast<int>(bloch.size()) != n_qubits) {
        throw ShapeMismatch("bloch: " + c.experiment + " needs " + std::to_string(n_qubits) +
                            " Bloch vectors, got " + std::to_string(bloch.size()));
    }

    std::optional<CircuitState> circuit;
    std::optional<CostFunction> cost;
    std::optional<RVector> theta0;
    if (c.experiment == "single-qubit") {
        circuit.emplace(single_qubit_circuit(bloch.front()));
        theta0 = repeated_start(1);
    } else if (c.experiment == "two-qubit") {
        circuit.emplace(two_qubit_circuit(bloch));
        cost = ObservableCost{two_qubit_hamiltonian()};
        theta0 = repeated_start(2);
    } else if (c.experiment == "three-qubit-heisenberg") {
        circuit.emplace(three_qubit_circuit(bloch));
        cost = ObservableCost{heisenberg_hamiltonian(c.omega, c.coupling)};
        theta0 = repeated_start(3);
    } else {
        circuit.emplace(parse_circuit(c.circuit, n_qubits, product_state(bloch)));
        if (c.cost == "observable") {
            cost = ObservableCost{parse_observable(c.observable, n_qubits)};
        }
        if (c.theta0.empty()) {
            throw ValidationError("theta0: required for custom experiments");
        }
    }
    const Eigen::Index n = circuit->n_params();
    if (!c.theta0.empty()) {
        theta0 = to_vector(c.theta0);
    }
    if (theta0->size() != n) {
        throw ShapeMismatch("theta0: expected " + std::to_string(n) + " values, got " +
                            std::to_string(theta0->size()));
    }
    if (!cost) {
        RVector target = c.theta_star.empty() ? RVector::Zero(n) : to_vector(c.theta_star);
        if (target.size() != n) {
            throw ShapeMismatch("theta-star: expected " + std::to_string(n) + " values, got " +
                                std::to_string(target.size()));
        }
        cost = StateDistanceCost{std::move(target)};
    }
    return ExperimentSetup{std::move(*circuit), std::move(*cost), std::move(*theta0)};
}

OptimizerSettings optimizer_settings(const ExperimentConfig &c, const PetzFunction &metric) {
    OptimizerSettings s;
    s.metric = metric;
    s.rule = c.rule;
    s.epsilon = c.epsilon;
    s.eta = c.eta;
    s.delta = c.delta;
    s.xi = c.xi;
    s.rank_tol = c.rank_tol;
    s.max_steps = c.steps;
    s.grad_tol = c.grad_tol;
    s.diagonal = c.diagonal;
    s.stall_stop = c.stall_stop;
    return s;
}

Trajectory run(const ExperimentConfig &config) {
    const ExperimentSetup setup = build_setup(config);
    return minimize(setup.circuit, setup.cost, setup.theta0,
                    optimizer_settings(config, PetzFunction::parse(config.metric)));
}

std::vector<PetzFunction> sweep_metrics(const ExperimentConfig &c) {
    if (c.sweep_alpha.empty()) {
        return {PetzFunction::parse(c.metric)};
    }
    const std::string family = c.metric.substr(0, c.metric.find(':'));
    std::vector<PetzFunction> out;
    for (const double a : c.sweep_alpha) {
        try {
            if (family == "sw") {
                out.push_back(PetzFunction::sandwiched(a));
            } else if (family == "st") {
                out.push_back(PetzFunction::standard(a));
            } else if (family == "lin") {
                const PetzFunction base = PetzFunction::parse(c.metric);
                out.push_back(PetzFunction::linear(a, base.left(), base.right()));
            } else {
                throw ValidationError("sweep-alpha needs an sw, st or lin metric, got '" +
                                      c.metric + "'");
            }
        } catch (const DomainError &e) {
            throw ValidationError(std::string("sweep-alpha: ") + e.what());
        }
    }
    return out;
}

std::string sweep_output_path(const std::string &out, const PetzFunction &f) {
    std::string tag = f.to_string();
    std::replace(tag.begin(), tag.end(), ':', '_');
    const auto slash = out.find_last_of('/');
    const auto dot = out.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return out + "_" + tag;
    }
    return out.substr(0, dot) + "_" + tag + out.substr(dot);
}

std::string trajectory_csv(const Trajectory &traj) {
    std::string csv = "step,cost,grad_norm,metric_cond\n";
    for (const TrajectoryRecord &r : traj.records) {
        csv += std::to_string(r.step) + "," + format_float(r.cost) + "," +
               format_float(r.grad_norm) + "," + format_float(r.metric_condition) + "\n";
    }
    return csv;
}

std::vector<RunSummary> run_experiment(const ExperimentConfig &config, std::ostream &log) {
    const ExperimentSetup setup = build_setup(config);
    const std::vector<PetzFunction> metrics = sweep_metrics(config);

    auto one = [&setup, &config](const PetzFunction &f, std::string path) {
        const auto start = std::chrono::steady_clock::now();
        RunSummary s{f.to_string(), std::move(path),
                     minimize(setup.circuit, setup.cost, setup.theta0,
                              optimizer_settings(config, f)),
                     0.0};
        s.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_file(s.path, trajectory_csv(s.trajectory));
        return s;
    };

    std::vector<RunSummary> results;
    if (config.sweep_alpha.empty()) {
        results.push_back(one(metrics.front(), config.out));
    } else {
        std::vector<std::future<RunSummary>> jobs;
        for (const PetzFunction &f : metrics) {
            jobs.push_back(std::async(std::launch::async, one, f,
                                      sweep_output_path(config.out, f)));
        }
        for (auto &j : jobs) {
            results.push_back(j.get());
        }
    }

    for (const RunSummary &s : results) {
        const Trajectory &t = s.trajectory;
        log << "metric=" << s.metric << " steps="
            << (t.records.empty() ? 0 : t.records.back().step) << " final_cost="
            << (t.records.empty() ? std::string("nan") : format_float(t.records.back().cost))
            << " stop=" << t.stop_reason << " wall_time=" << s.seconds << "s out=" << s.path;
        if (t.failed()) {
            log << " error=" << t.error_category << ": " << t.error_message;
        }
        log << '\n';
    }
    return results;
}

} // namespace qngm
