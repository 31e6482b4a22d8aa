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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qngm/petz.hpp"
#include "qngm/random.hpp"
#include "qngm/states.hpp"

namespace qngm {

/// Eigenvalues below this are treated as exact zeros by metric().
inline constexpr double kDefaultRankTol = 1e-9;

/**
 * @brief Quantum Fisher metric G_mn = g_f(X_m, X_n) at rho.
 *
 * Computed in the eigenbasis of rho as
 * sum_ij <psi_j|X_m|psi_i><psi_i|X_n|psi_j> / (p_j f(p_i / p_j)).
 * If one eigenvalue of a pair is below `rank_tol` the denominator becomes
 * p_big f(0); if both are, the term is skipped.
 *
 * @throws MetricUndefined if rho has an eigenvalue below rank_tol and f(0) = 0.
 * @throws NumericalError if a skipped kernel term is not negligible.
 */
RMatrix metric(const DensityOperator &rho, const std::vector<CMatrix> &tangents,
               const PetzFunction &f, double rank_tol = kDefaultRankTol);

/// Re<d_n psi|d_m psi> - Re(<psi|d_m psi><d_n psi|psi>).
RMatrix qgt_real(const CVector &psi, const std::vector<CVector> &dpsi);

/**
 * @brief Pure-state metric (2 / f(0)) qgt_real(psi, dpsi).
 *
 * @throws MetricUndefined if f(0) = 0; DomainError if psi is not normalized.
 */
RMatrix metric_pure(const CVector &psi, const std::vector<CVector> &dpsi, const PetzFunction &f);

/// Off-diagonal entries set to zero.
RMatrix diagonal(const RMatrix &g);

/// (1 - xi) G + xi I.
RMatrix regularize_metric(const RMatrix &g, double xi);

/// Completely positive trace-preserving map in Kraus form.
class QuantumChannel {
  public:
    /// @throws ShapeMismatch for inconsistent shapes, DomainError if sum K^dagger K != I.
    QuantumChannel(std::vector<CMatrix> kraus, std::string name = "kraus");

    static QuantumChannel identity(Eigen::Index d);
    /// rho -> (1 - p) rho + p I / d.
    static QuantumChannel depolarizing(Eigen::Index d, double p);
    /// Qubit amplitude damping with decay probability gamma.
    static QuantumChannel amplitude_damping(double gamma);
    /// Channel from a Haar-random Stinespring isometry with `n_kraus` operators.
    static QuantumChannel haar_random(Eigen::Index d, int n_kraus, Rng &rng);

    [[nodiscard]] const std::vector<CMatrix> &kraus() const noexcept { return kraus_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return kraus_.front().cols(); }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }

    /// sum_k K X K^dagger for any operator X.
    [[nodiscard]] CMatrix apply(const CMatrix &x) const;
    /// K_k (x) I on a larger register, the channel acting on the leading factor.
    [[nodiscard]] QuantumChannel tensor_identity(Eigen::Index d) const;

  private:
    std::vector<CMatrix> kraus_;
    std::string name_;
};

struct ChannelImage {
    DensityOperator rho;
    std::vector<CMatrix> tangents;
};

/// Pushes a state and its tangents through a channel.
ChannelImage apply_channel(const QuantumChannel &ch, const DensityOperator &rho,
                           const std::vector<CMatrix> &tangents);

struct MonotonicityWitness {
    int sample;
    CMatrix rho;
    CMatrix tangent;
    std::string channel;
    double before;
    double after;
};

struct ProbeResult {
    int samples = 0;
    double max_violation = 0.0;
    /// Sample with the largest violation when it exceeds 1e-9.
    std::optional<MonotonicityWitness> witness;
};

/**
 * @brief Searches for g_{gamma(rho)}(gamma_* X, gamma_* X) > g_rho(X, X).
 *
 * Sample k draws a full-rank state, a unit tangent and a channel
 * (depolarizing, amplitude damping or Haar-random with two Kraus operators)
 * from make_rng(seed, k), so results do not depend on evaluation order.
 */
ProbeResult monotonicity_probe(const PetzFunction &f, int samples, std::uint64_t seed,
                               Eigen::Index dim = 2);

} // namespace qngm
