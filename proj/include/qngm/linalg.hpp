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

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qngm/errors.hpp"

namespace qngm {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Entry tolerance for the Hermiticity precondition.
inline constexpr double kHermitianTol = 1e-10;
/// A Jacobi rotation is skipped once |a_pq| <= kJacobiTol * sqrt(|a_pp a_qq|).
/// The diagonal-relative test keeps small eigenvalues of graded positive
/// matrices accurate to working precision relative to their own size.
inline constexpr double kJacobiTol = 1e-15;
/// solve_sym rejects matrices with min eigenvalue at or below this fraction of
/// the max eigenvalue.
inline constexpr double kSingularTol = 1e-14;

/**
 * @brief Spectral decomposition M = V diag(eigenvalues) V^dagger.
 *
 * Eigenvalues are ascending; the columns of `eigenvectors` are orthonormal.
 */
template <typename Scalar> struct HermitianEig {
    RVector eigenvalues;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> eigenvectors;
};

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived> &m) {
    return m.allFinite();
}

/// Largest entry of |M - M^dagger|.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived> &m) {
    if (m.rows() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived> &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ShapeMismatch(std::string(what) + ": expected a non-empty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived> &m, const char *what) {
    require_square(m, what);
    if (!all_finite(m)) {
        throw DomainError(std::string(what) + ": non-finite entry");
    }
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTol) {
        throw NotHermitian(std::string(what) + ": max |M - M^dagger| = " +
                           std::to_string(defect));
    }
}

/**
 * @brief Eigendecomposition of a Hermitian (or real symmetric) matrix by
 * cyclic Jacobi rotations.
 *
 * @throws NotHermitian if max |M - M^dagger| exceeds 1e-10.
 */
template <typename Derived>
HermitianEig<typename Derived::Scalar>
hermitian_eig(const Eigen::MatrixBase<Derived> &m) {
    using Scalar = typename Derived::Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    require_hermitian(m, "hermitian_eig");

    const Eigen::Index n = m.rows();
    Matrix a = (m + m.adjoint()) / 2.0;
    Matrix v = Matrix::Identity(n, n);

    // Entries below this floor are treated as zero, so indefinite matrices with
    // vanishing diagonal entries still terminate.
    const double floor = std::numeric_limits<double>::epsilon() *
                         std::numeric_limits<double>::epsilon() * a.norm();

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (bool rotated = true; rotated; ++sweep) {
        if (sweep == kMaxSweeps) {
            throw NumericalError("hermitian_eig: Jacobi iteration did not converge");
        }
        rotated = false;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                const double dpq = std::sqrt(std::abs(std::real(a(p, p)) * std::real(a(q, q))));
                if (apq <= std::max(kJacobiTol * dpq, floor)) {
                    continue;
                }
                Eigen::JacobiRotation<Scalar> rot;
                rot.makeJacobi(a, p, q);
                a.applyOnTheLeft(p, q, rot.adjoint());
                a.applyOnTheRight(p, q, rot);
                a(p, q) = Scalar(0);
                a(q, p) = Scalar(0);
                v.applyOnTheRight(p, q, rot);
                rotated = true;
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index j) {
        return std::real(a(i, i)) < std::real(a(j, j));
    });

    HermitianEig<Scalar> out;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = order[static_cast<std::size_t>(k)];
        out.eigenvalues(k) = std::real(a(src, src));
        out.eigenvectors.col(k) = v.col(src);
    }
    return out;
}

/// V diag(phi(lambda)) V^dagger from a precomputed decomposition.
template <typename Scalar, typename Fn>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
matrix_fn(const HermitianEig<Scalar> &eig, Fn &&phi) {
    const Eigen::Index n = eig.eigenvalues.size();
    RVector mapped(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        mapped(k) = phi(eig.eigenvalues(k));
        if (!std::isfinite(mapped(k))) {
            throw DomainError("matrix_fn: eigenvalue " + std::to_string(eig.eigenvalues(k)) +
                              " outside the domain of the function");
        }
    }
    return eig.eigenvectors * mapped.asDiagonal() * eig.eigenvectors.adjoint();
}

/**
 * @brief Applies a real scalar function to a Hermitian matrix through its
 * spectrum.
 *
 * @throws DomainError if phi yields a non-finite value on some eigenvalue
 * (for example log at 0 or sqrt of a negative number).
 */
template <typename Derived, typename Fn>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
matrix_fn(const Eigen::MatrixBase<Derived> &m, Fn &&phi) {
    return matrix_fn(hermitian_eig(m), std::forward<Fn>(phi));
}

/**
 * @brief Solves G x = b for real symmetric positive-definite G.
 *
 * @throws Singular if min eigenvalue <= 1e-14 * max eigenvalue.
 */
RVector solve_sym(const RMatrix &g, const RVector &b);

/// lambda_max / lambda_min of a symmetric matrix; +inf if not positive definite.
double condition_number(const RMatrix &g);

/// Kronecker product of two dense complex matrices.
CMatrix kron(const CMatrix &a, const CMatrix &b);

namespace pauli {
CMatrix I();
CMatrix X();
CMatrix Y();
CMatrix Z();
} // namespace pauli

} // namespace qngm
