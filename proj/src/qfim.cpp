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

#include "qngm/qfim.hpp"

#include <cmath>
#include <sstream>

namespace qngm {

namespace {

constexpr double kKernelTol = 1e-9;
constexpr double kImagTol = 1e-10;
constexpr double kKrausTol = 1e-10;
constexpr double kNormTol = 1e-10;
constexpr double kWitnessTol = 1e-9;

void require_tangents(const std::vector<CMatrix> &tangents, Eigen::Index d) {
    for (std::size_t k = 0; k < tangents.size(); ++k) {
        const CMatrix &x = tangents[k];
        if (x.rows() != d || x.cols() != d) {
            throw ShapeMismatch("metric: tangent " + std::to_string(k) + " has shape " +
                                std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
        }
        require_hermitian(x, "metric tangent");
        if (std::abs(x.trace()) > 1e-10) {
            throw DomainError("metric: tangent " + std::to_string(k) + " is not traceless");
        }
    }
}

} // namespace

RMatrix metric(const DensityOperator &rho, const std::vector<CMatrix> &tangents,
               const PetzFunction &f, double rank_tol) {
    const Eigen::Index d = rho.dim();
    require_tangents(tangents, d);
    const RVector &p = rho.spectrum().eigenvalues;
    const CMatrix &v = rho.spectrum().eigenvectors;

    const bool deficient = p(0) < rank_tol;
    const double f0 = deficient ? f.at_zero() : 0.0;
    if (deficient && !(f0 > 0.0)) {
        throw MetricUndefined("metric: state has eigenvalue " + std::to_string(p(0)) +
                              " below the rank tolerance and " + f.to_string() +
                              " vanishes at 0");
    }

    // weight(i, j) = 1 / (p_j f(p_i / p_j)); NaN marks a skipped kernel pair.
    RMatrix weight(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            const bool bi = p(i) >= rank_tol;
            const bool bj = p(j) >= rank_tol;
            if (bi && bj) {
                weight(i, j) = 1.0 / (p(j) * f(p(i) / p(j)));
            } else if (bi || bj) {
                weight(i, j) = 1.0 / (std::max(p(i), p(j)) * f0);
            } else {
                weight(i, j) = std::numeric_limits<double>::quiet_NaN();
            }
        }
    }

    std::vector<CMatrix> xs;
    xs.reserve(tangents.size());
    for (const CMatrix &t : tangents) {
        xs.push_back(v.adjoint() * t * v);
    }

    const auto n = static_cast<Eigen::Index>(tangents.size());
    RMatrix g(n, n);
    for (Eigen::Index m = 0; m < n; ++m) {
        for (Eigen::Index k = m; k < n; ++k) {
            Complex sum = 0.0;
            for (Eigen::Index i = 0; i < d; ++i) {
                for (Eigen::Index j = 0; j < d; ++j) {
                    const Complex term = std::conj(xs[m](i, j)) * xs[k](i, j);
                    if (std::isnan(weight(i, j))) {
                        if (std::abs(term) >= kKernelTol) {
                            throw NumericalError("metric: kernel block of the tangents is " +
                                                 std::to_string(std::abs(term)));
                        }
                        continue;
                    }
                    sum += weight(i, j) * term;
                }
            }
            if (std::abs(sum.imag()) > kImagTol * std::max(1.0, std::abs(sum.real()))) {
                throw NumericalError("metric: imaginary residue " + std::to_string(sum.imag()));
            }
            g(m, k) = sum.real();
            g(k, m) = sum.real();
        }
    }
    return g;
}

RMatrix qgt_real(const CVector &psi, const std::vector<CVector> &dpsi) {
    const auto n = static_cast<Eigen::Index>(dpsi.size());
    RMatrix q(n, n);
    for (Eigen::Index m = 0; m < n; ++m) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const CVector &dm = dpsi[static_cast<std::size_t>(m)];
            const CVector &dk = dpsi[static_cast<std::size_t>(k)];
            if (dm.size() != psi.size() || dk.size() != psi.size()) {
                throw ShapeMismatch("qgt_real: derivative has the wrong dimension");
            }
            q(m, k) = std::real(dk.dot(dm)) - std::real(psi.dot(dm) * dk.dot(psi));
        }
    }
    return (q + q.transpose()) / 2.0;
}

RMatrix metric_pure(const CVector &psi, const std::vector<CVector> &dpsi, const PetzFunction &f) {
    if (std::abs(psi.norm() - 1.0) > kNormTol) {
        throw DomainError("metric_pure: ket is not normalized");
    }
    const double f0 = f.at_zero();
    if (!(f0 > 0.0)) {
        throw MetricUndefined("metric_pure: " + f.to_string() + " vanishes at 0");
    }
    return (2.0 / f0) * qgt_real(psi, dpsi);
}

RMatrix diagonal(const RMatrix &g) { return RMatrix(g.diagonal().asDiagonal()); }

RMatrix regularize_metric(const RMatrix &g, double xi) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw DomainError("regularize_metric: xi must lie in [0, 1]");
    }
    return (1.0 - xi) * g + xi * RMatrix::Identity(g.rows(), g.cols());
}

QuantumChannel::QuantumChannel(std::vector<CMatrix> kraus, std::string name)
    : kraus_(std::move(kraus)), name_(std::move(name)) {
    if (kraus_.empty()) {
        throw ShapeMismatch("QuantumChannel: no Kraus operators");
    }
    const Eigen::Index d = kraus_.front().rows();
    CMatrix sum = CMatrix::Zero(d, d);
    for (const CMatrix &k : kraus_) {
        if (k.rows() != d || k.cols() != d) {
            throw ShapeMismatch("QuantumChannel: Kraus operators must share one square shape");
        }
        sum += k.adjoint() * k;
    }
    const double defect = (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > kKrausTol) {
        throw DomainError("QuantumChannel: sum K^dagger K deviates from identity by " +
                          std::to_string(defect));
    }
}

QuantumChannel QuantumChannel::identity(Eigen::Index d) {
    return QuantumChannel({CMatrix::Identity(d, d)}, "identity");
}

QuantumChannel QuantumChannel::depolarizing(Eigen::Index d, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("depolarizing: p must lie in [0, 1]");
    }
    // Weyl operators X^a Z^b average any operator to its trace times I / d.
    const double pi = std::acos(-1.0);
    CMatrix shift = CMatrix::Zero(d, d);
    CMatrix clock = CMatrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        shift((k + 1) % d, k) = 1.0;
        clock(k, k) = std::polar(1.0, 2.0 * pi * static_cast<double>(k) / static_cast<double>(d));
    }
    std::vector<CMatrix> kraus;
    kraus.push_back(std::sqrt(1.0 - p) * CMatrix::Identity(d, d));
    CMatrix xa = CMatrix::Identity(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
        CMatrix zb = CMatrix::Identity(d, d);
        for (Eigen::Index b = 0; b < d; ++b) {
            kraus.push_back(std::sqrt(p) / static_cast<double>(d) * xa * zb);
            zb = zb * clock;
        }
        xa = xa * shift;
    }
    std::ostringstream name;
    name << "depolarizing(p=" << p << ")";
    return QuantumChannel(std::move(kraus), name.str());
}

QuantumChannel QuantumChannel::amplitude_damping(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw DomainError("amplitude_damping: gamma must lie in [0, 1]");
    }
    CMatrix k0 = CMatrix::Zero(2, 2);
    CMatrix k1 = CMatrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - gamma);
    k1(0, 1) = std::sqrt(gamma);
    std::ostringstream name;
    name << "amplitude_damping(gamma=" << gamma << ")";
    return QuantumChannel({k0, k1}, name.str());
}

QuantumChannel QuantumChannel::haar_random(Eigen::Index d, int n_kraus, Rng &rng) {
    if (n_kraus < 1) {
        throw DomainError("haar_random: need at least one Kraus operator");
    }
    const CMatrix iso = haar_isometry(d * n_kraus, d, rng);
    std::vector<CMatrix> kraus;
    for (int k = 0; k < n_kraus; ++k) {
        kraus.push_back(iso.block(k * d, 0, d, d));
    }
    return QuantumChannel(std::move(kraus), "haar_random(kraus=" + std::to_string(n_kraus) + ")");
}

CMatrix QuantumChannel::apply(const CMatrix &x) const {
    if (x.rows() != dim() || x.cols() != dim()) {
        throw ShapeMismatch("QuantumChannel: operator dimension " + std::to_string(x.rows()) +
                            " does not match channel dimension " + std::to_string(dim()));
    }
    CMatrix out = CMatrix::Zero(x.rows(), x.cols());
    for (const CMatrix &k : kraus_) {
        out += k * x * k.adjoint();
    }
    return (out + out.adjoint()) / 2.0;
}

QuantumChannel QuantumChannel::tensor_identity(Eigen::Index d) const {
    std::vector<CMatrix> kraus;
    for (const CMatrix &k : kraus_) {
        kraus.push_back(kron(k, CMatrix::Identity(d, d)));
    }
    return QuantumChannel(std::move(kraus), name_);
}

ChannelImage apply_channel(const QuantumChannel &ch, const DensityOperator &rho,
                           const std::vector<CMatrix> &tangents) {
    ChannelImage out{DensityOperator(ch.apply(rho.matrix())), {}};
    out.tangents.reserve(tangents.size());
    for (const CMatrix &x : tangents) {
        out.tangents.push_back(ch.apply(x));
    }
    return out;
}

ProbeResult monotonicity_probe(const PetzFunction &f, int samples, std::uint64_t seed,
                               Eigen::Index dim) {
    if (samples < 1) {
        throw DomainError("monotonicity_probe: need at least one sample");
    }
    const bool qubit_register = dim >= 2 && (dim & (dim - 1)) == 0;
    ProbeResult result;
    result.samples = samples;
    result.max_violation = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        Rng rng = make_rng(seed, static_cast<std::uint64_t>(s));
        const DensityOperator rho = random_density(dim, rng);
        const CMatrix x = random_tangent(dim, rng);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const int family = std::uniform_int_distribution<int>(0, 2)(rng);
        std::optional<QuantumChannel> ch;
        if (family == 0 || (family == 1 && !qubit_register)) {
            ch = QuantumChannel::depolarizing(dim, unit(rng));
        } else if (family == 1) {
            // gamma = 1 annihilates every tangent onto a pure output; stop short of it.
            ch = QuantumChannel::amplitude_damping(0.95 * unit(rng)).tensor_identity(dim / 2);
        } else {
            ch = QuantumChannel::haar_random(dim, 2, rng);
        }
        const ChannelImage img = apply_channel(*ch, rho, {x});
        const double before = metric(rho, {x}, f)(0, 0);
        const double after = metric(img.rho, img.tangents, f)(0, 0);
        const double violation = after - before;
        if (violation > result.max_violation) {
            result.max_violation = violation;
            if (violation > kWitnessTol) {
                result.witness = MonotonicityWitness{s, rho.matrix(), x, ch->name(), before, after};
            }
        }
    }
    return result;
}

} // namespace qngm
