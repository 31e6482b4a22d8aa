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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qngm {

/**
 * @brief A Petz function f: (0, inf) -> (0, inf) with f(1) = 1 and
 * f(t) = t f(1/t), selecting one quantum Fisher metric.
 *
 * Values are immutable and cheap to copy; linear combinations share their
 * operands.
 */
class PetzFunction {
  public:
    enum class Kind {
        SLD,
        BKM,
        RRLD,
        Half,
        Sandwiched,
        Standard,
        Linear,
        ZeroPlus,
        ZeroMinus,
        Infinity,
    };

    static PetzFunction sld();
    static PetzFunction bkm();
    static PetzFunction rrld();
    static PetzFunction half();
    /// f_alpha^sw. |alpha - 1| < 1e-6 yields BKM; |alpha| < 1e-6 throws DomainError.
    static PetzFunction sandwiched(double alpha);
    /// f_alpha^st. alpha within 1e-6 of 0 or 1 yields BKM.
    static PetzFunction standard(double alpha);
    /// (1 - weight) f1 + weight f2.
    static PetzFunction linear(double weight, const PetzFunction &f1, const PetzFunction &f2);
    /// alpha -> 0+ limit of f^sw: max(1, t).
    static PetzFunction zero_plus();
    /// alpha -> 0- limit of f^sw: min(1, t).
    static PetzFunction zero_minus();
    /// alpha -> +-inf limit of f^sw: t ln t / (t - 1).
    static PetzFunction infinity();

    /// Parses `sld | bkm | rrld | half | sw:<a> | st:<a> | lin:<a>:<f1>:<f2> | sw:0+ | sw:0- | sw:inf`.
    static PetzFunction parse(std::string_view spec);

    /// @throws DomainError for t <= 0.
    [[nodiscard]] double operator()(double t) const;
    /// Limit t -> 0+.
    [[nodiscard]] double at_zero() const;

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    /// Family parameter for Sandwiched, Standard and Linear; 0 otherwise.
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] const PetzFunction &left() const;
    [[nodiscard]] const PetzFunction &right() const;
    /// Canonical textual form accepted by parse().
    [[nodiscard]] std::string to_string() const;

  private:
    PetzFunction(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}

    Kind kind_;
    double alpha_;
    std::shared_ptr<const std::pair<PetzFunction, PetzFunction>> parts_;
};

using ScalarFunction = std::function<double(double)>;

/// `n` points log-spaced on [lo, hi].
std::vector<double> log_grid(double lo = 1e-3, double hi = 1e3, int n = 200);

struct ConditionReport {
    double f1_violation = 0.0;
    double symmetry_violation = 0.0;
    double min_value = 0.0;
    bool f1_ok = false;
    bool symmetry_ok = false;
    bool positivity_ok = false;

    [[nodiscard]] bool ok() const { return f1_ok && symmetry_ok && positivity_ok; }
};

/**
 * @brief Checks f(1) = 1, f(t) = t f(1/t) and f > 0 on a grid.
 *
 * Violations are relative, |a - b| / max(1, |b|), and compared against 1e-10.
 */
ConditionReport check_conditions(const ScalarFunction &f, const std::vector<double> &grid);

enum class Order { Precedes, Succeeds, Equal, Incomparable };

std::string to_string(Order order);

/// Pointwise partial order of f and g on the grid with tolerance 1e-12.
Order compare(const ScalarFunction &f, const ScalarFunction &g, const std::vector<double> &grid);

/// d/dbeta f^sw_{1/beta}(t); returns the limit 0 within 1e-6 of t = 1.
double beta_derivative(double beta, double t);

/**
 * @brief Known operator-monotonicity of f.
 *
 * Exact for the named families. Linear combinations are monotone for weights
 * in [0, 1] with monotone operands; outside that range nullopt is returned
 * unless f leaves the band [rRLD, SLD] on the default grid, which rules
 * monotonicity out.
 */
std::optional<bool> is_operator_monotone(const PetzFunction &f);

/// True if f is non-decreasing on the sorted grid.
bool is_monotone_on_grid(const ScalarFunction &f, const std::vector<double> &grid);

} // namespace qngm
