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

#include "qngm/petz.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "qngm/errors.hpp"

namespace qngm {

namespace {

constexpr double kTaylorWindow = 1e-6;
constexpr double kDispatchTol = 1e-6;
constexpr double kConditionTol = 1e-10;
constexpr double kCompareTol = 1e-12;

// expm1(x) / expm1(y) without overflow when x and y are both large and positive.
double expm1_ratio(double x, double y) {
    if (x > 700.0 || y > 700.0) {
        return std::exp(x - y) * std::expm1(-x) / std::expm1(-y);
    }
    return std::expm1(x) / std::expm1(y);
}

double sandwiched_value(double alpha, double t) {
    const double u = std::log(t);
    const double a = 1.0 / alpha;
    return (1.0 - alpha) * expm1_ratio(a * u, (a - 1.0) * u);
}

double standard_value(double alpha, double t) {
    const double u = std::log(t);
    const double d = t - 1.0;
    return alpha * (1.0 - alpha) * d * d /
           (std::expm1(alpha * u) * std::expm1((1.0 - alpha) * u));
}

std::string format_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view token, std::string_view spec) {
    const std::string s(token);
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw ParseError("metric '" + std::string(spec) + "': '" + s + "' is not a number");
    }
    return v;
}

class SpecParser {
  public:
    explicit SpecParser(std::string_view spec) : spec_(spec) {
        std::size_t start = 0;
        while (true) {
            const std::size_t colon = spec.find(':', start);
            tokens_.push_back(spec.substr(start, colon - start));
            if (colon == std::string_view::npos) {
                break;
            }
            start = colon + 1;
        }
    }

    PetzFunction parse_all() {
        PetzFunction f = parse_one();
        if (pos_ != tokens_.size()) {
            fail("trailing tokens");
        }
        return f;
    }

  private:
    std::string_view next() {
        if (pos_ >= tokens_.size()) {
            fail("unexpected end of specification");
        }
        return tokens_[pos_++];
    }

    [[noreturn]] void fail(const std::string &why) const {
        throw ParseError("metric '" + std::string(spec_) + "': " + why);
    }

    PetzFunction parse_one() {
        const std::string_view head = next();
        if (head == "sld") {
            return PetzFunction::sld();
        }
        if (head == "bkm") {
            return PetzFunction::bkm();
        }
        if (head == "rrld") {
            return PetzFunction::rrld();
        }
        if (head == "half") {
            return PetzFunction::half();
        }
        if (head == "sw") {
            const std::string_view arg = next();
            if (arg == "0+") {
                return PetzFunction::zero_plus();
            }
            if (arg == "0-") {
                return PetzFunction::zero_minus();
            }
            if (arg == "inf" || arg == "+inf" || arg == "-inf") {
                return PetzFunction::infinity();
            }
            return wrap([&] { return PetzFunction::sandwiched(parse_number(arg, spec_)); });
        }
        if (head == "st") {
            const double a = parse_number(next(), spec_);
            return PetzFunction::standard(a);
        }
        if (head == "lin") {
            const double w = parse_number(next(), spec_);
            const PetzFunction f1 = parse_one();
            const PetzFunction f2 = parse_one();
            return PetzFunction::linear(w, f1, f2);
        }
        fail("unknown function '" + std::string(head) + "'");
    }

    template <typename Fn> PetzFunction wrap(Fn &&make) const {
        try {
            return make();
        } catch (const DomainError &e) {
            throw ParseError("metric '" + std::string(spec_) + "': " + e.what());
        }
    }

    std::string_view spec_;
    std::vector<std::string_view> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

PetzFunction PetzFunction::sld() { return {Kind::SLD, 0.0}; }
PetzFunction PetzFunction::bkm() { return {Kind::BKM, 0.0}; }
PetzFunction PetzFunction::rrld() { return {Kind::RRLD, 0.0}; }
PetzFunction PetzFunction::half() { return {Kind::Half, 0.0}; }
PetzFunction PetzFunction::zero_plus() { return {Kind::ZeroPlus, 0.0}; }
PetzFunction PetzFunction::zero_minus() { return {Kind::ZeroMinus, 0.0}; }
PetzFunction PetzFunction::infinity() { return {Kind::Infinity, 0.0}; }

PetzFunction PetzFunction::sandwiched(double alpha) {
    if (!std::isfinite(alpha)) {
        throw DomainError("sandwiched: alpha must be finite");
    }
    if (std::abs(alpha) < kDispatchTol) {
        throw DomainError("sandwiched: alpha = 0 is singular; use the 0+ or 0- limit");
    }
    if (std::abs(alpha - 1.0) < kDispatchTol) {
        return bkm();
    }
    return {Kind::Sandwiched, alpha};
}

PetzFunction PetzFunction::standard(double alpha) {
    if (!std::isfinite(alpha)) {
        throw DomainError("standard: alpha must be finite");
    }
    if (std::abs(alpha) < kDispatchTol || std::abs(alpha - 1.0) < kDispatchTol) {
        return bkm();
    }
    return {Kind::Standard, alpha};
}

PetzFunction PetzFunction::linear(double weight, const PetzFunction &f1, const PetzFunction &f2) {
    if (!std::isfinite(weight)) {
        throw DomainError("linear: weight must be finite");
    }
    PetzFunction f{Kind::Linear, weight};
    f.parts_ = std::make_shared<const std::pair<PetzFunction, PetzFunction>>(f1, f2);
    return f;
}

PetzFunction PetzFunction::parse(std::string_view spec) { return SpecParser(spec).parse_all(); }

const PetzFunction &PetzFunction::left() const {
    if (!parts_) {
        throw DomainError("left(): not a linear combination");
    }
    return parts_->first;
}

const PetzFunction &PetzFunction::right() const {
    if (!parts_) {
        throw DomainError("right(): not a linear combination");
    }
    return parts_->second;
}

double PetzFunction::operator()(double t) const {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("Petz function evaluated at t = " + std::to_string(t));
    }
    switch (kind_) {
    case Kind::SLD:
        return 0.5 * (1.0 + t);
    case Kind::RRLD:
        return 2.0 * t / (1.0 + t);
    case Kind::Half:
        return std::sqrt(t);
    case Kind::ZeroPlus:
        return std::max(1.0, t);
    case Kind::ZeroMinus:
        return std::min(1.0, t);
    case Kind::Linear:
        return (1.0 - alpha_) * parts_->first(t) + alpha_ * parts_->second(t);
    default:
        break;
    }
    if (std::abs(t - 1.0) < kTaylorWindow) {
        return 1.0 + 0.5 * (t - 1.0);
    }
    switch (kind_) {
    case Kind::BKM:
        return (t - 1.0) / std::log(t);
    case Kind::Sandwiched:
        return sandwiched_value(alpha_, t);
    case Kind::Standard:
        return standard_value(alpha_, t);
    case Kind::Infinity:
        return t * std::log(t) / (t - 1.0);
    default:
        break;
    }
    throw DomainError("unhandled Petz function kind");
}

double PetzFunction::at_zero() const {
    switch (kind_) {
    case Kind::SLD:
        return 0.5;
    case Kind::BKM:
    case Kind::RRLD:
    case Kind::Half:
    case Kind::ZeroMinus:
    case Kind::Infinity:
        return 0.0;
    case Kind::ZeroPlus:
        return 1.0;
    case Kind::Sandwiched:
        return (alpha_ > 0.0 && alpha_ < 1.0) ? 1.0 - alpha_ : 0.0;
    case Kind::Standard:
        return (alpha_ > 0.0 && alpha_ < 1.0) ? alpha_ * (1.0 - alpha_) : 0.0;
    case Kind::Linear:
        return (1.0 - alpha_) * parts_->first.at_zero() + alpha_ * parts_->second.at_zero();
    }
    return 0.0;
}

std::string PetzFunction::to_string() const {
    switch (kind_) {
    case Kind::SLD:
        return "sld";
    case Kind::BKM:
        return "bkm";
    case Kind::RRLD:
        return "rrld";
    case Kind::Half:
        return "half";
    case Kind::ZeroPlus:
        return "sw:0+";
    case Kind::ZeroMinus:
        return "sw:0-";
    case Kind::Infinity:
        return "sw:inf";
    case Kind::Sandwiched:
        return "sw:" + format_number(alpha_);
    case Kind::Standard:
        return "st:" + format_number(alpha_);
    case Kind::Linear:
        return "lin:" + format_number(alpha_) + ":" + parts_->first.to_string() + ":" +
               parts_->second.to_string();
    }
    return {};
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw DomainError("log_grid: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(n));
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int k = 0; k < n; ++k) {
        grid[static_cast<std::size_t>(k)] = std::exp(a + (b - a) * k / (n - 1));
    }
    return grid;
}

ConditionReport check_conditions(const ScalarFunction &f, const std::vector<double> &grid) {
    ConditionReport r;
    r.f1_violation = std::abs(f(1.0) - 1.0);
    r.min_value = std::numeric_limits<double>::infinity();
    for (const double t : grid) {
        const double ft = f(t);
        const double mirrored = t * f(1.0 / t);
        const double v = std::abs(ft - mirrored) / std::max(1.0, std::abs(mirrored));
        r.symmetry_violation = std::max(r.symmetry_violation, std::isnan(v) ? INFINITY : v);
        r.min_value = std::min(r.min_value, ft);
    }
    r.f1_ok = r.f1_violation <= kConditionTol;
    r.symmetry_ok = r.symmetry_violation <= kConditionTol;
    r.positivity_ok = r.min_value > 0.0;
    return r;
}

std::string to_string(Order order) {
    switch (order) {
    case Order::Precedes:
        return "precedes";
    case Order::Succeeds:
        return "succeeds";
    case Order::Equal:
        return "equal";
    case Order::Incomparable:
        return "incomparable";
    }
    return {};
}

Order compare(const ScalarFunction &f, const ScalarFunction &g, const std::vector<double> &grid) {
    bool below = false;
    bool above = false;
    for (const double t : grid) {
        const double a = f(t);
        const double b = g(t);
        const double tol = kCompareTol * std::max({1.0, std::abs(a), std::abs(b)});
        if (a < b - tol) {
            below = true;
        } else if (a > b + tol) {
            above = true;
        }
    }
    if (below && above) {
        return Order::Incomparable;
    }
    if (below) {
        return Order::Precedes;
    }
    if (above) {
        return Order::Succeeds;
    }
    return Order::Equal;
}

double beta_derivative(double beta, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw DomainError("beta_derivative: t must be positive");
    }
    if (std::abs(beta) < 1e-12 || std::abs(beta - 1.0) < 1e-12) {
        throw DomainError("beta_derivative: beta must differ from 0 and 1");
    }
    if (std::abs(t - 1.0) < kTaylorWindow) {
        return 0.0;
    }
    const double u = std::log(t);
    const double one_minus_tb = -std::expm1(beta * u);
    const double one_minus_tb1 = -std::expm1((beta - 1.0) * u);
    const double num = one_minus_tb * one_minus_tb1 +
                       beta * (1.0 - beta) * std::exp((beta - 1.0) * u) * u * (t - 1.0);
    return num / (beta * beta * one_minus_tb1 * one_minus_tb1);
}

std::optional<bool> is_operator_monotone(const PetzFunction &f) {
    using Kind = PetzFunction::Kind;
    switch (f.kind()) {
    case Kind::SLD:
    case Kind::BKM:
    case Kind::RRLD:
    case Kind::Half:
    case Kind::Infinity:
        return true;
    case Kind::ZeroPlus:
    case Kind::ZeroMinus:
        return false;
    case Kind::Sandwiched: {
        const double beta = 1.0 / f.alpha();
        return beta >= -1.0 && beta <= 2.0;
    }
    case Kind::Standard:
        return f.alpha() >= -1.0 && f.alpha() <= 2.0;
    case Kind::Linear: {
        const auto a = is_operator_monotone(f.left());
        const auto b = is_operator_monotone(f.right());
        if (f.alpha() >= 0.0 && f.alpha() <= 1.0 && a.value_or(false) && b.value_or(false)) {
            return true;
        }
        const auto grid = log_grid();
        const auto lo = PetzFunction::rrld();
        const auto hi = PetzFunction::sld();
        for (const double t : grid) {
            const double v = f(t);
            if (v < lo(t) - 1e-12 * v || v > hi(t) + 1e-12 * v) {
                return false;
            }
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

bool is_monotone_on_grid(const ScalarFunction &f, const std::vector<double> &grid) {
    std::vector<double> sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    double prev = -std::numeric_limits<double>::infinity();
    for (const double t : sorted) {
        const double v = f(t);
        if (v < prev - 1e-12 * std::max(1.0, std::abs(prev))) {
            return false;
        }
        prev = v;
    }
    return true;
}

} // namespace qngm
