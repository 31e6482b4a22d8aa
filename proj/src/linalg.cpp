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

#include "qngm/linalg.hpp"

#include <limits>

namespace qngm {

RVector solve_sym(const RMatrix &g, const RVector &b) {
    require_square(g, "solve_sym");
    if (b.size() != g.rows()) {
        throw ShapeMismatch("solve_sym: right-hand side has length " + std::to_string(b.size()) +
                            ", matrix is " + std::to_string(g.rows()) + "x" +
                            std::to_string(g.cols()));
    }
    const auto eig = hermitian_eig(g);
    const double lo = eig.eigenvalues(0);
    const double hi = eig.eigenvalues(eig.eigenvalues.size() - 1);
    if (!(hi > 0.0) || lo <= kSingularTol * hi) {
        throw Singular("solve_sym: eigenvalue range [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] is not safely positive definite");
    }
    const RMatrix sym = (g + g.transpose()) / 2.0;
    Eigen::LLT<RMatrix> llt(sym);
    if (llt.info() != Eigen::Success) {
        throw Singular("solve_sym: Cholesky factorization failed");
    }
    RVector x = llt.solve(b);
    // One step of iterative refinement keeps the residual at roundoff level
    // for condition numbers up to ~1e12.
    x += llt.solve(b - sym * x);
    return x;
}

double condition_number(const RMatrix &g) {
    require_square(g, "condition_number");
    const auto eig = hermitian_eig(g);
    const double lo = eig.eigenvalues(0);
    const double hi = eig.eigenvalues(eig.eigenvalues.size() - 1);
    if (lo <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return hi / lo;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

namespace pauli {

CMatrix I() { return CMatrix::Identity(2, 2); }

CMatrix X() {
    CMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

CMatrix Y() {
    CMatrix m(2, 2);
    m << Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0, 0.0);
    return m;
}

CMatrix Z() {
    CMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

} // namespace pauli

} // namespace qngm
