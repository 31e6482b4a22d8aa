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

using namespace qngm;
using Catch::Approx;

TEST_CASE("hermitian_eig on textbook spectra", "[linalg]") {
    SECTION("identity") {
        const auto eig = hermitian_eig(CMatrix::Identity(2, 2));
        CHECK(eig.eigenvalues(0) == Approx(1.0));
        CHECK(eig.eigenvalues(1) == Approx(1.0));
        CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors - CMatrix::Identity(2, 2)).norm() <
              1e-12);
    }
    SECTION("Pauli X") {
        const auto eig = hermitian_eig(pauli::X());
        CHECK(eig.eigenvalues(0) == Approx(-1.0));
        CHECK(eig.eigenvalues(1) == Approx(1.0));
        const CVector minus = eig.eigenvectors.col(0);
        CHECK(std::abs(minus(0) + minus(1)) < 1e-12);
        CHECK(std::abs(std::abs(minus(0)) - 1.0 / std::sqrt(2.0)) < 1e-12);
    }
    SECTION("diagonal input is sorted ascending") {
        RMatrix m = RMatrix::Zero(3, 3);
        m.diagonal() << 3.0, -1.0, 2.0;
        const auto eig = hermitian_eig(m);
        CHECK(eig.eigenvalues(0) == Approx(-1.0));
        CHECK(eig.eigenvalues(1) == Approx(2.0));
        CHECK(eig.eigenvalues(2) == Approx(3.0));
    }
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices", "[linalg][property]") {
    Rng rng = make_rng(11);
    for (const Eigen::Index d : {1, 2, 3, 4, 8, 16}) {
        for (int rep = 0; rep < 20; ++rep) {
            const CMatrix m = test::random_hermitian(d, rng);
            const auto eig = hermitian_eig(m);
            const CMatrix &v = eig.eigenvectors;
            const CMatrix back = v * eig.eigenvalues.asDiagonal() * v.adjoint();
            CHECK((back - m).norm() <= 1e-12 * m.norm());
            CHECK((v.adjoint() * v - CMatrix::Identity(d, d)).norm() <= 1e-12);
            for (Eigen::Index k = 1; k < d; ++k) {
                CHECK(eig.eigenvalues(k - 1) <= eig.eigenvalues(k));
            }
            // Independent oracle: Eigen's tridiagonal QR solver.
            Eigen::SelfAdjointEigenSolver<CMatrix> oracle(m);
            CHECK((eig.eigenvalues - oracle.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12 * m.norm());
        }
    }
}

TEST_CASE("hermitian_eig handles degenerate and real inputs", "[linalg]") {
    Rng rng = make_rng(12);
    const CMatrix u = haar_unitary(4, rng);
    RVector lam(4);
    lam << 0.5, 0.5, 0.5, -2.0;
    const CMatrix m = u * lam.asDiagonal() * u.adjoint();
    const auto eig = hermitian_eig(m);
    CHECK((eig.eigenvectors * eig.eigenvalues.asDiagonal() * eig.eigenvectors.adjoint() - m)
              .norm() <= 1e-12 * m.norm());

    RMatrix sym = RMatrix::Random(5, 5);
    sym = (sym + sym.transpose()).eval();
    const auto reig = hermitian_eig(sym);
    static_assert(std::is_same_v<decltype(reig.eigenvectors), RMatrix>);
    CHECK((reig.eigenvectors * reig.eigenvalues.asDiagonal() * reig.eigenvectors.transpose() - sym)
              .norm() <= 1e-12 * sym.norm());
}

TEST_CASE("hermitian_eig keeps graded small eigenvalues accurate", "[linalg]") {
    Rng rng = make_rng(5);
    for (int s = 0; s < 20; ++s) {
        // D A D with A well conditioned: det(M) = det(D)^2 det(A) exactly.
        const CMatrix a = random_density(4, rng, 0.3).matrix();
        const RVector d{{1.0, 1e-4, 1e-8, 1e-12}};
        const CMatrix m = d.asDiagonal() * a * d.asDiagonal();
        const RVector ev = hermitian_eig(m).eigenvalues;
        const double det_d = d.prod();
        const double expect = det_d * det_d * a.determinant().real();
        CHECK(ev.prod() == Approx(expect).epsilon(1e-10));
        CHECK(ev(0) > 0.0);
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input", "[linalg][errors]") {
    CMatrix m = pauli::X();
    m(0, 1) = 2.0;
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
    CMatrix almost = pauli::X();
    almost(0, 1) += 1e-11;
    CHECK_NOTHROW(hermitian_eig(almost));
    CHECK_THROWS_AS(hermitian_eig(CMatrix(2, 3)), ShapeMismatch);
}

TEST_CASE("matrix_fn applies scalar functions through the spectrum", "[linalg]") {
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const CMatrix s = matrix_fn(d, [](double x) { return std::sqrt(x); });
    CHECK(std::abs(s(0, 0) - 2.0) < 1e-12);
    CHECK(std::abs(s(1, 1) - 3.0) < 1e-12);
    CHECK(std::abs(s(0, 1)) < 1e-12);

    Rng rng = make_rng(13);
    const CMatrix m = test::random_hermitian(4, rng);
    CHECK((matrix_fn(m, [](double x) { return x; }) - m).norm() < 1e-12 * m.norm());
    CHECK(matrix_fn(CMatrix::Identity(3, 3), [](double x) { return std::log(x); }).norm() < 1e-15);

    CHECK_THROWS_AS(matrix_fn(CMatrix::Zero(2, 2), [](double x) { return std::log(x); }),
                    DomainError);
    CHECK_THROWS_AS(matrix_fn(-CMatrix::Identity(2, 2), [](double x) { return std::sqrt(x); }),
                    DomainError);
}

TEST_CASE("matrix_fn composes for commuting functions", "[linalg][property]") {
    Rng rng = make_rng(14);
    for (int rep = 0; rep < 20; ++rep) {
        const CMatrix w = random_ginibre(4, 4, rng);
        const CMatrix m = w * w.adjoint();
        const auto square = [](double x) { return x * x; };
        const auto root = [](double x) { return std::sqrt(std::max(x, 0.0)); };
        const CMatrix direct = matrix_fn(m, [&](double x) { return root(square(x)); });
        const CMatrix nested = matrix_fn(matrix_fn(m, square), root);
        CHECK((direct - nested).norm() <= 1e-10 * m.norm());
        CHECK((direct - m).norm() <= 1e-10 * m.norm());
    }
}

TEST_CASE("solve_sym", "[linalg]") {
    SECTION("identity and diagonal") {
        RVector b(2);
        b << 1.0, 2.0;
        CHECK((solve_sym(RMatrix::Identity(2, 2), b) - b).norm() < 1e-15);
        RMatrix g = RMatrix::Zero(2, 2);
        g.diagonal() << 2.0, 4.0;
        RVector c(2);
        c << 2.0, 4.0;
        CHECK((solve_sym(g, c) - RVector::Ones(2)).norm() < 1e-15);
    }
    SECTION("random SPD residual") {
        Rng rng = make_rng(15);
        std::normal_distribution<double> normal;
        for (int rep = 0; rep < 50; ++rep) {
            const Eigen::Index n = 2 + rep % 8;
            RMatrix a(n, n);
            for (Eigen::Index i = 0; i < n * n; ++i) {
                a.data()[i] = normal(rng);
            }
            const RMatrix g = a * a.transpose() + 1e-3 * RMatrix::Identity(n, n);
            RVector b(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                b(i) = normal(rng);
            }
            const RVector x = solve_sym(g, b);
            CHECK((g * x - b).norm() <= 1e-10 * b.norm());
        }
    }
    SECTION("errors") {
        RMatrix singular = RMatrix::Zero(2, 2);
        singular(0, 0) = 1.0;
        CHECK_THROWS_AS(solve_sym(singular, RVector::Ones(2)), Singular);
        RMatrix tiny = RMatrix::Identity(2, 2);
        tiny(1, 1) = 1e-15;
        CHECK_THROWS_AS(solve_sym(tiny, RVector::Ones(2)), Singular);
        CHECK_THROWS_AS(solve_sym(RMatrix::Identity(2, 2), RVector::Ones(3)), ShapeMismatch);
    }
}

TEST_CASE("kron and condition_number", "[linalg]") {
    const CMatrix zx = kron(pauli::Z(), pauli::X());
    CHECK(zx.rows() == 4);
    CHECK(std::abs(zx(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(zx(2, 3) + 1.0) < 1e-15);
    RMatrix g = RMatrix::Zero(2, 2);
    g.diagonal() << 1.0, 4.0;
    CHECK(condition_number(g) == Approx(4.0));
    g(0, 0) = 0.0;
    CHECK(std::isinf(condition_number(g)));
}
