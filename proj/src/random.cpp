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

#include "qngm/random.hpp"

namespace qngm {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

CMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

CMatrix haar_isometry(Eigen::Index d_out, Eigen::Index d_in, Rng &rng) {
    const CMatrix g = random_ginibre(d_out, d_in, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(d_out, d_in);
    const CMatrix &r = qr.matrixQR();
    for (Eigen::Index k = 0; k < d_in; ++k) {
        const Complex rkk = r(k, k);
        if (std::abs(rkk) > 0.0) {
            q.col(k) *= rkk / std::abs(rkk);
        }
    }
    return q;
}

CMatrix haar_unitary(Eigen::Index d, Rng &rng) { return haar_isometry(d, d, rng); }

DensityOperator random_density(Eigen::Index d, Rng &rng, double mix) {
    const CMatrix w = random_ginibre(d, d, rng);
    CMatrix m = w * w.adjoint();
    m /= m.trace().real();
    m = (1.0 - mix) * m + (mix / static_cast<double>(d)) * CMatrix::Identity(d, d);
    return DensityOperator((m + m.adjoint()) / 2.0);
}

CMatrix random_tangent(Eigen::Index d, Rng &rng) {
    const CMatrix w = random_ginibre(d, d, rng);
    CMatrix x = (w + w.adjoint()) / 2.0;
    x -= (x.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
    return x / x.norm();
}

CVector random_ket(Eigen::Index d, Rng &rng) {
    CVector v = random_ginibre(d, 1, rng).col(0);
    return v / v.norm();
}

RVector random_simplex(Eigen::Index n, Rng &rng, double floor) {
    std::exponential_distribution<double> expo(1.0);
    RVector p(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        p(k) = expo(rng);
    }
    p /= p.sum();
    const double keep = 1.0 - floor * static_cast<double>(n);
    p = keep * p + RVector::Constant(n, floor);
    // Make the last coordinate absorb rounding so the sum is 1 to machine precision.
    p(n - 1) = 1.0 - p.head(n - 1).sum();
    return p;
}

} // namespace qngm
