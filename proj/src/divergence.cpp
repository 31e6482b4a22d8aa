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

#include "qngm/divergence.hpp"

#include <cmath>


namespace qngm {

namespace {

constexpr double kRankTol = 1e-12;
constexpr double kImagTol = 1e-10;
constexpr double kRenyiLimitTol = 1e-6;

void require_full_rank(const DensityOperator &rho, const char *which) {
    if (rho.spectrum().eigenvalues(0) < kRankTol) {
        throw RankDeficient(std::string("divergence: ") + which + " has eigenvalue " +
                            std::to_string(rho.spectrum().eigenvalues(0)));
    }
}

double real_part_checked(Complex z, const char *what) {
    if (std::abs(z.imag()) > kImagTol * std::max(1.0, std::abs(z.real()))) {
        throw NumericalError(std::string(what) + ": imaginary residue " +
                             std::to_string(z.imag()));
    }
    return z.real();
}

double log_positive(double x, const char *what) {
    if (!(x > 0.0)) {
        throw NumericalError(std::string(what) + ": non-positive trace " + std::to_string(x));
    }
    return std::log(x);
}

double quantum_kl(const DensityOperator &rho_bar, const DensityOperator &rho) {
    const RVector &pb = rho_bar.spectrum().eigenvalues;
    const double self = (pb.array() * pb.array().log()).sum();
    const CMatrix log_rho =
        matrix_fn(rho.spectrum(), [](double p) { return std::log(p); });
    const double cross =
        real_part_checked((rho_bar.matrix() * log_rho).trace(), "quantum KL");
    return self - cross;
}

double standard_renyi(double alpha, const DensityOperator &rho_bar, const DensityOperator &rho) {
    const CMatrix a = matrix_fn(rho_bar.spectrum(), [alpha](double p) { return std::pow(p, alpha); });
    const CMatrix b =
        matrix_fn(rho.spectrum(), [alpha](double p) { return std::pow(p, 1.0 - alpha); });
    const double tr = real_part_checked((a * b).trace(), "standard Renyi");
    return log_positive(tr, "standard Renyi") / (alpha * (alpha - 1.0));
}

double sandwiched_renyi(double alpha, const DensityOperator &rho_bar,
                        const DensityOperator &rho) {
    const double s = (1.0 - alpha) / (2.0 * alpha);
    // Sandwich in the eigenbasis of rho: D A D with A = V^dagger rho_bar V is a
    // graded positive matrix, so Jacobi resolves its small eigenvalues.
    const auto &spec = rho.spectrum();
    const RVector d = spec.eigenvalues.array().pow(s);
    CMatrix inner = d.asDiagonal() * (spec.eigenvectors.adjoint() * rho_bar.matrix() *
                                      spec.eigenvectors) *
                    d.asDiagonal();
    inner = (inner + inner.adjoint()).eval() / 2.0;
    const auto eig = hermitian_eig(inner);
    double tr = 0.0;
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lam = eig.eigenvalues(k);
        if (!(lam > 0.0)) {
            throw NumericalError("sandwiched Renyi: non-positive eigenvalue in the sandwich");
        }
        tr += std::pow(lam, alpha);
    }
    return log_positive(tr, "sandwiched Renyi") / (alpha * (alpha - 1.0));
}

double f_divergence(const FDivergence &fd, const DensityOperator &rho_bar,
                    const DensityOperator &rho) {
    const RVector &pb = rho_bar.spectrum().eigenvalues;
    const RVector &p = rho.spectrum().eigenvalues;
    const CMatrix overlap = rho_bar.spectrum().eigenvectors.adjoint() * rho.spectrum().eigenvectors;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        for (Eigen::Index j = 0; j < pb.size(); ++j) {
            sum += p(i) * fd.F(pb(j) / p(i)) * std::norm(overlap(j, i));
        }
    }
    return sum;
}

CMatrix sqrt_psd(const HermitianEig<Complex> &eig) {
    return matrix_fn(eig, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

} // namespace

double divergence(const DivergenceKind &kind, const DensityOperator &rho_bar,
                  const DensityOperator &rho) {
    if (rho_bar.dim() != rho.dim()) {
        throw ShapeMismatch("divergence: states have dimensions " +
                            std::to_string(rho_bar.dim()) + " and " + std::to_string(rho.dim()));
    }
    require_full_rank(rho_bar, "first state");
    require_full_rank(rho, "second state");
    return std::visit(
        [&](const auto &k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, QuantumKL>) {
                return quantum_kl(rho_bar, rho);
            } else if constexpr (std::is_same_v<T, FDivergence>) {
                return f_divergence(k, rho_bar, rho);
            } else {
                if (std::abs(k.alpha - 1.0) < kRenyiLimitTol) {
                    return quantum_kl(rho_bar, rho);
                }
                if (k.alpha == 0.0) {
                    throw DomainError("Renyi divergence: alpha = 0 is excluded");
                }
                if constexpr (std::is_same_v<T, StandardRenyi>) {
                    return standard_renyi(k.alpha, rho_bar, rho);
                } else {
                    return sandwiched_renyi(k.alpha, rho_bar, rho);
                }
            }
        },
        kind);
}

double f_alpha(double alpha, double t) {
    if (alpha == 1.0) {
        return t * std::log(t);
    }
    if (alpha == -1.0) {
        return -std::log(t);
    }
    return 4.0 / (1.0 - alpha * alpha) * (1.0 - std::pow(t, (1.0 + alpha) / 2.0));
}

double f_divergence_consistency(double alpha) {
    const PetzFunction f = PetzFunction::standard((1.0 + alpha) / 2.0);
    double worst = 0.0;
    for (const double t : log_grid()) {
        const double lhs = f_alpha(alpha, t) + t * f_alpha(alpha, 1.0 / t);
        const double rhs = (1.0 - t) * (1.0 - t) / f(t);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    return worst;
}

double fidelity(const DensityOperator &rho, const DensityOperator &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw ShapeMismatch("fidelity: states have different dimensions");
    }
    const CMatrix s = sqrt_psd(rho.spectrum());
    CMatrix inner = s * sigma.matrix() * s;
    inner = (inner + inner.adjoint()).eval() / 2.0;
    const auto eig = hermitian_eig(inner);
    double tr = 0.0;
    for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
        tr += std::sqrt(std::max(eig.eigenvalues(k), 0.0));
    }
    return std::clamp(tr * tr, 0.0, 1.0);
}

double bures_angle(const DensityOperator &rho, const DensityOperator &sigma) {
    return std::acos(std::sqrt(fidelity(rho, sigma)));
}

double bures_distance(const DensityOperator &rho, const DensityOperator &sigma) {
    return std::sqrt(bures_distance_squared(rho, sigma));
}

double bures_distance_squared(const DensityOperator &rho_bar, const DensityOperator &rho) {
    return 2.0 * (1.0 - std::sqrt(fidelity(rho_bar, rho)));
}

double fubini_study(const CVector &psi, const CVector &phi) {
    if (psi.size() != phi.size()) {
        throw ShapeMismatch("fubini_study: kets have different dimensions");
    }
    const double n1 = psi.squaredNorm();
    const double n2 = phi.squaredNorm();
    if (!(n1 > 0.0) || !(n2 > 0.0)) {
        throw DomainError("fubini_study: zero ket");
    }
    const double c = std::norm(psi.dot(phi)) / (n1 * n2);
    return std::acos(std::sqrt(std::clamp(c, 0.0, 1.0)));
}

std::optional<DivergenceKind> hessian_divergence(const PetzFunction &f) {
    using Kind = PetzFunction::Kind;
    switch (f.kind()) {
    case Kind::SLD:
        return SandwichedRenyi{0.5};
    case Kind::RRLD:
        return SandwichedRenyi{-1.0};
    case Kind::Half:
        return SandwichedRenyi{2.0};
    case Kind::BKM:
        return QuantumKL{};
    case Kind::Sandwiched:
        return SandwichedRenyi{f.alpha()};
    case Kind::Standard:
        return StandardRenyi{f.alpha()};
    default:
        return std::nullopt;
    }
}

RMatrix fd_hessian(const std::function<double(const RVector &)> &displaced, Eigen::Index n,
                   double h) {
    if (!(h > 0.0)) {
        throw DomainError("fd_hessian: step must be positive");
    }
    const RVector zero = RVector::Zero(n);
    const double d0 = displaced(zero);
    RMatrix hess(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        RVector e = zero;
        e(i) = h;
        hess(i, i) = (displaced(e) + displaced(-e) - 2.0 * d0) / (h * h);
        for (Eigen::Index j = 0; j < i; ++j) {
            RVector ej = zero;
            ej(j) = h;
            const double v = (displaced(e + ej) - displaced(e - ej) - displaced(-e + ej) +
                              displaced(-e - ej)) /
                             (4.0 * h * h);
            hess(i, j) = v;
            hess(j, i) = v;
        }
    }
    return hess;
}

RMatrix fd_hessian(const StateDivergence &d, const StateMap &state, const RVector &theta,
                   double h) {
    const DensityOperator base = state(theta);
    return fd_hessian(
        [&](const RVector &delta) { return d(state(theta + delta), base); }, theta.size(), h);
}

RMatrix fd_hessian(const DivergenceKind &kind, const StateMap &state, const RVector &theta,
                   double h) {
    return fd_hessian(
        [&kind](const DensityOperator &a, const DensityOperator &b) {
            return divergence(kind, a, b);
        },
        state, theta, h);
}

RMatrix fd_hessian(const DivergenceKind &kind, const CircuitState &circuit,
                   const RVector &theta, double h, double delta) {
    return fd_hessian(kind, regularized_map(circuit, delta), theta, h);
}

RMatrix fd_hessian(const ClassicalDivergence &d, const DiscreteDistribution &p, double h) {
    const RVector x = p.free_coordinates();
    return fd_hessian(
        [&](const RVector &delta) { return d(DiscreteDistribution::from_free(x + delta), p); },
        x.size(), h);
}

} // namespace qngm
