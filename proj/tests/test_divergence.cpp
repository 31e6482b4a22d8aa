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

#include "test_support.hpp"

#include "qngm/divergence.hpp"
#include "qngm/qfim.hpp"
#include "qngm/random.hpp"

using namespace qngm;
using Catch::Approx;

namespace {

const std::vector<DivergenceKind> &kinds() {
    static const std::vector<DivergenceKind> k = {
        QuantumKL{},           StandardRenyi{0.3},     StandardRenyi{0.5},
        StandardRenyi{-0.4},   StandardRenyi{1.7},     SandwichedRenyi{0.5},
        SandwichedRenyi{0.75}, SandwichedRenyi{2.0},   SandwichedRenyi{-1.0},
        SandwichedRenyi{0.3},  FDivergence{[](double t) { return f_alpha(0.2, t); }},
    };
    return k;
}

DensityOperator diag_state(std::initializer_list<double> p) {
    RVector v(static_cast<Eigen::Index>(p.size()));
    Eigen::Index i = 0;
    for (const double x : p) {
        v(i++) = x;
    }
    return DensityOperator(v.cast<Complex>().asDiagonal());
}

DensityOperator pure(const CVector &psi) { return DensityOperator(psi * psi.adjoint()); }

} // namespace

TEST_CASE("divergences vanish at coincidence", "[divergence]") {
    Rng rng = make_rng(21);
    for (const Eigen::Index d : {2, 4}) {
        const DensityOperator rho = random_density(d, rng);
        for (const auto &k : kinds()) {
            CHECK(std::abs(divergence(k, rho, rho)) < 1e-12);
        }
    }
}

TEST_CASE("commuting states reduce to classical divergences", "[divergence]") {
    const DensityOperator a = diag_state({0.5, 0.3, 0.2});
    const DensityOperator b = diag_state({0.2, 0.2, 0.6});
    const DiscreteDistribution p(RVector{{0.5, 0.3, 0.2}});
    const DiscreteDistribution q(RVector{{0.2, 0.2, 0.6}});
    CHECK(divergence(QuantumKL{}, a, b) == Approx(kl(p, q)).epsilon(1e-13));
    for (const double alpha : {-0.5, 0.3, 0.5, 2.0, 3.0}) {
        CHECK(divergence(StandardRenyi{alpha}, a, b) ==
              Approx(renyi_classical(p, q, alpha)).epsilon(1e-12));
        CHECK(divergence(SandwichedRenyi{alpha}, a, b) ==
              Approx(renyi_classical(p, q, alpha)).epsilon(1e-12));
    }
}

TEST_CASE("frozen divergence values", "[divergence]") {
    // Oracle: scipy sqrtm, cross-checked with Tr(rho sigma) + 2 sqrt(det rho det sigma).
    const DensityOperator a = bloch_state(0.3, 0.0, 0.4);
    const DensityOperator b = bloch_state(0.0, 0.5, -0.2);
    CHECK(fidelity(a, b) == Approx(0.824862987983161).epsilon(1e-12));
}

TEST_CASE("Renyi limits at alpha = 1", "[divergence]") {
    Rng rng = make_rng(22);
    const DensityOperator a = random_density(3, rng);
    const DensityOperator b = random_density(3, rng);
    const double k = divergence(QuantumKL{}, a, b);
    for (const double alpha : {1.0 - 1e-6, 1.0 + 1e-6, 1.0 - 1e-4, 1.0 + 1e-4}) {
        CHECK(std::abs(divergence(SandwichedRenyi{alpha}, a, b) - k) < 1e-4 * std::max(1.0, k));
        CHECK(std::abs(divergence(StandardRenyi{alpha}, a, b) - k) < 1e-4 * std::max(1.0, k));
    }
    CHECK(divergence(SandwichedRenyi{1.0}, a, b) == k);
    CHECK_THROWS_AS(divergence(StandardRenyi{0.0}, a, b), DomainError);
    // F(t) = t log t reproduces the quantum KL divergence.
    const FDivergence tlogt{[](double t) { return t * std::log(t); }};
    CHECK(divergence(tlogt, a, b) == Approx(k).epsilon(1e-12));
}

TEST_CASE("divergences are nonnegative", "[divergence][property]") {
    Rng rng = make_rng(23);
    for (const Eigen::Index d : {2, 4}) {
        for (int s = 0; s < 500; ++s) {
            const DensityOperator a = random_density(d, rng);
            const DensityOperator b = random_density(d, rng);
            for (const auto &k : kinds()) {
                CHECK(divergence(k, a, b) >= -1e-12);
            }
        }
    }
}

TEST_CASE("data processing for the quantum KL divergence", "[divergence][property]") {
    Rng rng = make_rng(24);
    for (int s = 0; s < 200; ++s) {
        const DensityOperator a = random_density(2, rng);
        const DensityOperator b = random_density(2, rng);
        const QuantumChannel ch = QuantumChannel::haar_random(2, 2, rng);
        const DensityOperator ca(ch.apply(a.matrix()));
        const DensityOperator cb(ch.apply(b.matrix()));
        if (ca.spectrum().eigenvalues(0) < 1e-10 || cb.spectrum().eigenvalues(0) < 1e-10) {
            continue;
        }
        CHECK(divergence(QuantumKL{}, ca, cb) <= divergence(QuantumKL{}, a, b) + 1e-12);
    }
}

TEST_CASE("fidelity and Bures distance", "[divergence]") {
    const DensityOperator up = bloch_state(0, 0, 1);
    const DensityOperator down = bloch_state(0, 0, -1);
    CHECK(fidelity(up, down) == Approx(0.0).margin(1e-15));
    CHECK(bures_distance(up, down) == Approx(std::sqrt(2.0)));
    CHECK(bures_angle(up, down) == Approx(M_PI / 2));
    CHECK(fidelity(up, up) == Approx(1.0));
    CHECK(bures_distance(up, up) == Approx(0.0).margin(1e-7));

    const DensityOperator a = diag_state({0.7, 0.3});
    const DensityOperator b = diag_state({0.4, 0.6});
    const double root = std::sqrt(0.7 * 0.4) + std::sqrt(0.3 * 0.6);
    CHECK(fidelity(a, b) == Approx(root * root).epsilon(1e-13));
    CHECK(fidelity(a, b) == Approx(fidelity(b, a)).epsilon(1e-12));
    CHECK(bures_distance_squared(a, b) == Approx(2.0 * (1.0 - root)).epsilon(1e-12));
}

TEST_CASE("Bures angle equals Fubini-Study distance on pure states", "[divergence][property]") {
    Rng rng = make_rng(25);
    for (int s = 0; s < 100; ++s) {
        const CVector psi = random_ket(3, rng);
        const CVector phi = random_ket(3, rng);
        CHECK(bures_angle(pure(psi), pure(phi)) ==
              Approx(fubini_study(psi, phi)).epsilon(1e-6).margin(1e-6));
    }
    const CVector psi = random_ket(2, rng);
    CHECK(fubini_study(psi, Complex(0.0, 1.0) * psi) == Approx(0.0).margin(1e-7));
    CHECK_THROWS_AS(fubini_study(CVector::Zero(2), psi), DomainError);
}

TEST_CASE("Bures angle and distance agree to third order", "[divergence][property]") {
    Rng rng = make_rng(26);
    const DensityOperator rho = random_density(3, rng);
    const CMatrix x = random_tangent(3, rng);
    for (const double eps : {1e-1, 3e-2, 1e-2}) {
        const DensityOperator sigma((rho.matrix() + eps * x) / (rho.matrix() + eps * x).trace());
        const double a = bures_angle(rho, sigma);
        const double d = bures_distance(rho, sigma);
        CHECK(a - d >= -1e-12);
        CHECK(a - d <= a * a * a / 20.0 + 1e-12);
    }
}

TEST_CASE("f-divergence consistency identity", "[divergence]") {
    for (const double alpha : {-1.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
        CHECK(f_divergence_consistency(alpha) < 1e-10);
    }
    CHECK(f_alpha(1.0, std::exp(1.0)) == Approx(std::exp(1.0)));
    CHECK(f_alpha(-1.0, std::exp(1.0)) == Approx(-1.0));
    CHECK(f_alpha(0.0, 4.0) == Approx(-4.0));
}

TEST_CASE("divergence input validation", "[divergence]") {
    const DensityOperator a = bloch_state(0.2, 0, 0);
    CHECK_THROWS_AS(divergence(QuantumKL{}, bloch_state(0, 0, 1), a), RankDeficient);
    CHECK_THROWS_AS(divergence(QuantumKL{}, a, bloch_state(0, 0, 1)), RankDeficient);
    CHECK_THROWS_AS(divergence(QuantumKL{}, a, DensityOperator(CMatrix::Identity(4, 4) / 4.0)),
                    ShapeMismatch);
}

TEST_CASE("Hessian divergences for each metric family", "[divergence]") {
    auto alpha_of = [](const DivergenceKind &k) {
        return std::get<SandwichedRenyi>(k).alpha;
    };
    CHECK(alpha_of(*hessian_divergence(PetzFunction::sld())) == 0.5);
    CHECK(alpha_of(*hessian_divergence(PetzFunction::rrld())) == -1.0);
    CHECK(alpha_of(*hessian_divergence(PetzFunction::half())) == 2.0);
    CHECK(alpha_of(*hessian_divergence(PetzFunction::sandwiched(0.1))) == 0.1);
    CHECK(std::holds_alternative<QuantumKL>(*hessian_divergence(PetzFunction::bkm())));
    CHECK(std::get<StandardRenyi>(*hessian_divergence(PetzFunction::standard(0.3))).alpha == 0.3);
    CHECK_FALSE(hessian_divergence(PetzFunction::zero_plus()).has_value());
}

TEST_CASE("raw Hessian of the squared Bures distance is half the SLD metric", "[divergence]") {
    const CircuitState c = single_qubit_circuit();
    RVector theta(3);
    theta << 0.3, 1.1, -0.7;
    const RMatrix hess = fd_hessian(StateDivergence(bures_distance_squared),
                                    regularized_map(c, 0.0), theta, 1e-3);
    const RMatrix g = metric(c.evaluate(theta), c.derivatives(theta), PetzFunction::sld());
    CHECK((hess - 0.5 * g).norm() <= 1e-5 * g.norm());
}
