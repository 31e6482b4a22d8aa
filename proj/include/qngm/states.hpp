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
#include <functional>
#include <variant>
#include <vector>

#include "qngm/linalg.hpp"

namespace qngm {

/**
 * @brief Hermitian, positive semidefinite, unit-trace matrix.
 *
 * The spectrum is computed once at construction and cached.
 */
class DensityOperator {
  public:
    /// @throws NotHermitian, DomainError (trace or negative eigenvalue), ShapeMismatch.
    explicit DensityOperator(CMatrix m);

    [[nodiscard]] const CMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return m_.rows(); }
    [[nodiscard]] const HermitianEig<Complex> &spectrum() const noexcept { return eig_; }

  private:
    CMatrix m_;
    HermitianEig<Complex> eig_;
};

/// 1/2 (I + x X + y Y + z Z); requires x^2 + y^2 + z^2 <= 1.
DensityOperator bloch_state(double x, double y, double z);

/// Tensor product of single-qubit Bloch states, qubit 0 leftmost.
DensityOperator product_state(const std::vector<std::array<double, 3>> &bloch);

/// (1 - delta) rho + delta I / N.
DensityOperator regularize_state(const DensityOperator &rho, double delta);

/// Rotation exp(-i theta_param Z / 2) on `wire`.
struct RotationZ {
    int wire;
    int param;
};

/// Rotation exp(-i theta_param Y / 2) on `wire`.
struct RotationY {
    int wire;
    int param;
};

struct Cnot {
    int control;
    int target;
};

using Gate = std::variant<RotationZ, RotationY, Cnot>;

/// Appends R3(theta) = Rz(theta^3) Ry(theta^2) Rz(theta^1), so Rz(theta^1) acts first.
void append_r3(std::vector<Gate> &gates, int wire, int p1, int p2, int p3);

/**
 * @brief Gate circuit applied to a fixed initial density operator.
 *
 * rho(theta) = U(theta) rho_ini U(theta)^dagger with U the ordered product of
 * the gates. Several gates may share one parameter index.
 */
class CircuitState {
  public:
    /// @throws ShapeMismatch on out-of-range wires or parameter indices.
    CircuitState(int n_qubits, DensityOperator initial, std::vector<Gate> gates, int n_params);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] int n_params() const noexcept { return n_params_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return initial_.dim(); }
    [[nodiscard]] const DensityOperator &initial() const noexcept { return initial_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }

    [[nodiscard]] CMatrix unitary(const RVector &theta) const;
    [[nodiscard]] DensityOperator evaluate(const RVector &theta) const;
    [[nodiscard]] CMatrix evaluate_matrix(const RVector &theta) const;
    /// Entry k is d rho / d theta^k, Hermitian and traceless.
    [[nodiscard]] std::vector<CMatrix> derivatives(const RVector &theta) const;

  private:
    void require_params(const RVector &theta) const;
    [[nodiscard]] CMatrix gate_matrix(const Gate &g, const RVector &theta) const;

    int n_qubits_;
    DensityOperator initial_;
    std::vector<Gate> gates_;
    int n_params_;
};

using StateMap = std::function<DensityOperator(const RVector &)>;

/// theta -> regularize_state(circuit.evaluate(theta), delta).
StateMap regularized_map(const CircuitState &circuit, double delta);

/// Embeds a single-qubit operator on `wire` of an n-qubit register.
CMatrix embed(const CMatrix &op, int wire, int n_qubits);

/// Pauli string such as {'Z', 'I', 'X'} on consecutive wires.
CMatrix pauli_string(const std::string &ops);

/// Single-qubit setup: R3 on one wire.
CircuitState single_qubit_circuit(const std::array<double, 3> &bloch = {0.5, 0.0, 0.0});

/// R3 on each wire followed by CNOT(0, 1), CNOT(1, 0).
CircuitState two_qubit_circuit(const std::vector<std::array<double, 3>> &bloch);

/// R3 on each wire followed by CNOT(0, 1), CNOT(1, 2), CNOT(2, 0).
CircuitState three_qubit_circuit(const std::vector<std::array<double, 3>> &bloch);

/// Z_1 + 0.1 X_1 X_2.
CMatrix two_qubit_hamiltonian();

/// sum_i (omega Z_i + J sigma_i . sigma_{i+1}) on a periodic three-qubit ring.
CMatrix heisenberg_hamiltonian(double omega, double coupling);

} // namespace qngm
