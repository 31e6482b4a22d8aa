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

#include "qngm/states.hpp"

#include <cmath>

namespace qngm {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kNegativeTol = 1e-10;

CMatrix cnot_matrix(int control, int target, int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    const Eigen::Index cbit = Eigen::Index{1} << (n_qubits - 1 - control);
    const Eigen::Index tbit = Eigen::Index{1} << (n_qubits - 1 - target);
    CMatrix m = CMatrix::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const Eigen::Index out = (b & cbit) != 0 ? (b ^ tbit) : b;
        m(out, b) = 1.0;
    }
    return m;
}

CMatrix rotation(const CMatrix &generator, double angle) {
    return std::cos(angle / 2.0) * CMatrix::Identity(2, 2) -
           Complex(0.0, std::sin(angle / 2.0)) * generator;
}

} // namespace

DensityOperator::DensityOperator(CMatrix m) {
    require_hermitian(m, "DensityOperator");
    m_ = (m + m.adjoint()) / 2.0;
    const Complex tr = m_.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw DomainError("DensityOperator: trace is " + std::to_string(tr.real()));
    }
    eig_ = hermitian_eig(m_);
    if (eig_.eigenvalues(0) < -kNegativeTol) {
        throw DomainError("DensityOperator: negative eigenvalue " +
                          std::to_string(eig_.eigenvalues(0)));
    }
}

DensityOperator bloch_state(double x, double y, double z) {
    const double r2 = x * x + y * y + z * z;
    if (!std::isfinite(r2) || r2 > 1.0 + 1e-12) {
        throw DomainError("bloch_state: vector lies outside the unit ball");
    }
    return DensityOperator(0.5 * (pauli::I() + x * pauli::X() + y * pauli::Y() + z * pauli::Z()));
}

DensityOperator product_state(const std::vector<std::array<double, 3>> &bloch) {
    if (bloch.empty()) {
        throw ShapeMismatch("product_state: need at least one qubit");
    }
    CMatrix m = CMatrix::Ones(1, 1);
    for (const auto &b : bloch) {
        m = kron(m, bloch_state(b[0], b[1], b[2]).matrix());
    }
    return DensityOperator(std::move(m));
}

DensityOperator regularize_state(const DensityOperator &rho, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw DomainError("regularize_state: delta must lie in [0, 1]");
    }
    if (delta == 0.0) {
        return rho;
    }
    const Eigen::Index n = rho.dim();
    return DensityOperator((1.0 - delta) * rho.matrix() +
                           (delta / static_cast<double>(n)) * CMatrix::Identity(n, n));
}

void append_r3(std::vector<Gate> &gates, int wire, int p1, int p2, int p3) {
    gates.emplace_back(RotationZ{wire, p1});
    gates.emplace_back(RotationY{wire, p2});
    gates.emplace_back(RotationZ{wire, p3});
}

CMatrix embed(const CMatrix &op, int wire, int n_qubits) {
    const Eigen::Index left = Eigen::Index{1} << wire;
    const Eigen::Index right = Eigen::Index{1} << (n_qubits - 1 - wire);
    return kron(kron(CMatrix::Identity(left, left), op), CMatrix::Identity(right, right));
}

CMatrix pauli_string(const std::string &ops) {
    CMatrix m = CMatrix::Ones(1, 1);
    for (const char c : ops) {
        switch (c) {
        case 'I':
            m = kron(m, pauli::I());
            break;
        case 'X':
            m = kron(m, pauli::X());
            break;
        case 'Y':
            m = kron(m, pauli::Y());
            break;
        case 'Z':
            m = kron(m, pauli::Z());
            break;
        default:
            throw DomainError(std::string("pauli_string: unknown operator '") + c + "'");
        }
    }
    return m;
}

CircuitState::CircuitState(int n_qubits, DensityOperator initial, std::vector<Gate> gates,
                           int n_params)
    : n_qubits_(n_qubits), initial_(std::move(initial)), gates_(std::move(gates)),
      n_params_(n_params) {
    if (n_qubits < 1 || n_qubits > 4) {
        throw ShapeMismatch("CircuitState: supports 1 to 4 qubits");
    }
    if (initial_.dim() != (Eigen::Index{1} << n_qubits)) {
        throw ShapeMismatch("CircuitState: initial state has dimension " +
                            std::to_string(initial_.dim()));
    }
    if (n_params < 0) {
        throw ShapeMismatch("CircuitState: negative parameter count");
    }
    auto check_wire = [n_qubits](int w) {
        if (w < 0 || w >= n_qubits) {
            throw ShapeMismatch("CircuitState: wire " + std::to_string(w) + " out of range");
        }
    };
    auto check_param = [n_params](int p) {
        if (p < 0 || p >= n_params) {
            throw ShapeMismatch("CircuitState: parameter index " + std::to_string(p) +
                                " out of range");
        }
    };
    for (const Gate &g : gates_) {
        std::visit(
            [&](const auto &gate) {
                using T = std::decay_t<decltype(gate)>;
                if constexpr (std::is_same_v<T, Cnot>) {
                    check_wire(gate.control);
                    check_wire(gate.target);
                    if (gate.control == gate.target) {
                        throw ShapeMismatch("CircuitState: CNOT control equals target");
                    }
                } else {
                    check_wire(gate.wire);
                    check_param(gate.param);
                }
            },
            g);
    }
}

void CircuitState::require_params(const RVector &theta) const {
    if (theta.size() != n_params_) {
        throw ShapeMismatch("CircuitState: expected " + std::to_string(n_params_) +
                            " parameters, got " + std::to_string(theta.size()));
    }
}

CMatrix CircuitState::gate_matrix(const Gate &g, const RVector &theta) const {
    if (const auto *rz = std::get_if<RotationZ>(&g)) {
        return embed(rotation(pauli::Z(), theta(rz->param)), rz->wire, n_qubits_);
    }
    if (const auto *ry = std::get_if<RotationY>(&g)) {
        return embed(rotation(pauli::Y(), theta(ry->param)), ry->wire, n_qubits_);
    }
    const auto &cx = std::get<Cnot>(g);
    return cnot_matrix(cx.control, cx.target, n_qubits_);
}

CMatrix CircuitState::unitary(const RVector &theta) const {
    require_params(theta);
    CMatrix u = CMatrix::Identity(dim(), dim());
    for (const Gate &g : gates_) {
        u = gate_matrix(g, theta) * u;
    }
    return u;
}

CMatrix CircuitState::evaluate_matrix(const RVector &theta) const {
    const CMatrix u = unitary(theta);
    return u * initial_.matrix() * u.adjoint();
}

DensityOperator CircuitState::evaluate(const RVector &theta) const {
    return DensityOperator(evaluate_matrix(theta));
}

std::vector<CMatrix> CircuitState::derivatives(const RVector &theta) const {
    require_params(theta);
    const std::size_t m = gates_.size();
    std::vector<CMatrix> us;
    us.reserve(m);
    for (const Gate &g : gates_) {
        us.push_back(gate_matrix(g, theta));
    }
    // suffix[k] = U_{m-1} ... U_{k+1}
    std::vector<CMatrix> suffix(m);
    CMatrix acc = CMatrix::Identity(dim(), dim());
    for (std::size_t k = m; k-- > 0;) {
        suffix[k] = acc;
        acc = acc * us[k];
    }

    std::vector<CMatrix> out(static_cast<std::size_t>(n_params_),
                             CMatrix::Zero(dim(), dim()));
    CMatrix rho = initial_.matrix();
    const Complex minus_half_i(0.0, -0.5);
    for (std::size_t k = 0; k < m; ++k) {
        rho = us[k] * rho * us[k].adjoint();
        int param = -1;
        CMatrix generator;
        if (const auto *rz = std::get_if<RotationZ>(&gates_[k])) {
            param = rz->param;
            generator = embed(pauli::Z(), rz->wire, n_qubits_);
        } else if (const auto *ry = std::get_if<RotationY>(&gates_[k])) {
            param = ry->param;
            generator = embed(pauli::Y(), ry->wire, n_qubits_);
        } else {
            continue;
        }
        const CMatrix inserted = minus_half_i * (generator * rho - rho * generator);
        out[static_cast<std::size_t>(param)] += suffix[k] * inserted * suffix[k].adjoint();
    }
    for (CMatrix &d : out) {
        d = (d + d.adjoint()).eval() / 2.0;
    }
    return out;
}

StateMap regularized_map(const CircuitState &circuit, double delta) {
    return [&circuit, delta](const RVector &theta) {
        return regularize_state(circuit.evaluate(theta), delta);
    };
}

CircuitState single_qubit_circuit(const std::array<double, 3> &bloch) {
    std::vector<Gate> gates;
    append_r3(gates, 0, 0, 1, 2);
    return CircuitState(1, product_state({bloch}), std::move(gates), 3);
}

CircuitState two_qubit_circuit(const std::vector<std::array<double, 3>> &bloch) {
    if (bloch.size() != 2) {
        throw ShapeMismatch("two_qubit_circuit: need two Bloch vectors");
    }
    std::vector<Gate> gates;
    append_r3(gates, 0, 0, 1, 2);
    append_r3(gates, 1, 3, 4, 5);
    gates.emplace_back(Cnot{0, 1});
    gates.emplace_back(Cnot{1, 0});
    return CircuitState(2, product_state(bloch), std::move(gates), 6);
}

CircuitState three_qubit_circuit(const std::vector<std::array<double, 3>> &bloch) {
    if (bloch.size() != 3) {
        throw ShapeMismatch("three_qubit_circuit: need three Bloch vectors");
    }
    std::vector<Gate> gates;
    for (int w = 0; w < 3; ++w) {
        append_r3(gates, w, 3 * w, 3 * w + 1, 3 * w + 2);
    }
    gates.emplace_back(Cnot{0, 1});
    gates.emplace_back(Cnot{1, 2});
    gates.emplace_back(Cnot{2, 0});
    return CircuitState(3, product_state(bloch), std::move(gates), 9);
}

CMatrix two_qubit_hamiltonian() { return pauli_string("ZI") + 0.1 * pauli_string("XX"); }

CMatrix heisenberg_hamiltonian(double omega, double coupling) {
    const CMatrix paulis[3] = {pauli::X(), pauli::Y(), pauli::Z()};
    CMatrix h = CMatrix::Zero(8, 8);
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        h += omega * embed(pauli::Z(), i, 3);
        for (const CMatrix &s : paulis) {
            h += coupling * embed(s, i, 3) * embed(s, j, 3);
        }
    }
    return h;
}

} // namespace qngm
