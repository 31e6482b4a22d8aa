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

#include "qngm/properties.hpp"

#include <cmath>
#include <sstream>

#include "qngm/divergence.hpp"

namespace qngm {

namespace {

constexpr double kCoincidenceTol = 1e-10;
constexpr double kProbeTol = 1e-9;
constexpr double kOracleTol = 1e-3;
constexpr double kOrderTol = 1e-9;
constexpr double kIdentityTol = 1e-10;

PetzFunction P(const char *spec) { return PetzFunction::parse(spec); }

double max_rel_gap(const PetzFunction &f, const PetzFunction &g, const std::vector<double> &grid) {
    double worst = 0.0;
    for (const double t : grid) {
        const double a = f(t);
        const double b = g(t);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
    }
    return worst;
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << x;
    return s.str();
}

bool weakly_precedes(Order o) { return o == Order::Precedes || o == Order::Equal; }

struct LinearFamily {
    DensityOperator base;
    std::vector<CMatrix> directions;

    [[nodiscard]] DensityOperator at(const RVector &theta) const {
        CMatrix m = base.matrix();
        for (Eigen::Index k = 0; k < theta.size(); ++k) {
            m += theta(k) * directions[static_cast<std::size_t>(k)];
        }
        return DensityOperator(std::move(m));
    }
};

LinearFamily random_family(Eigen::Index d, int n_params, Rng &rng) {
    LinearFamily fam{random_density(d, rng, 0.3), {}};
    for (int k = 0; k < n_params; ++k) {
        fam.directions.push_back(random_tangent(d, rng));
    }
    return fam;
}

PropertyCheck coincidences() {
    const auto grid = log_grid();
    const std::vector<std::pair<PetzFunction, PetzFunction>> pairs = {
        {P("sw:0.5"), P("sld")},  {P("sw:2"), P("half")},    {P("sw:-1"), P("rrld")},
        {P("st:2"), P("rrld")},   {P("st:-1"), P("rrld")},   {P("st:1"), P("bkm")},
        {P("st:0"), P("bkm")},    {P("st:0.2"), P("st:0.8")}, {P("st:-0.7"), P("st:1.7")}};
    double worst = 0.0;
    for (const auto &[f, g] : pairs) {
        worst = std::max(worst, max_rel_gap(f, g, grid));
    }
    return {"petz coincidences", worst < kCoincidenceTol, worst,
            std::to_string(pairs.size()) + " identities, max relative gap"};
}

PropertyCheck conditions() {
    const auto grid = log_grid();
    const char *specs[] = {"sld",   "bkm",  "rrld", "half",   "sw:0.1", "sw:0.25",
                           "sw:2",  "sw:-1", "sw:-0.5", "sw:3", "st:0.3", "st:2",
                           "st:-1", "lin:0.3:rrld:sld", "lin:3:rrld:sld", "sw:0+", "sw:0-",
                           "sw:inf"};
    double worst = 0.0;
    bool ok = true;
    std::string failing;
    for (const char *s : specs) {
        const ConditionReport r = check_conditions(P(s), grid);
        worst = std::max({worst, r.f1_violation, r.symmetry_violation});
        if (!r.ok()) {
            ok = false;
            failing += std::string(" ") + s;
        }
    }
    return {"petz normalization and symmetry", ok, worst,
            ok ? "all registry functions" : "failing:" + failing};
}

PropertyCheck extremal_order() {
    const auto grid = log_grid();
    const PetzFunction lo = P("rrld");
    const PetzFunction hi = P("sld");
    const char *specs[] = {"bkm", "half", "sw:0.5", "sw:0.7", "sw:2", "sw:-1", "sw:-3",
                           "st:0.3", "st:1.5", "st:-0.5", "lin:0.4:bkm:half", "sw:inf"};
    bool ok = true;
    std::string failing;
    for (const char *s : specs) {
        const PetzFunction f = P(s);
        if (!is_operator_monotone(f).value_or(false)) {
            ok = false;
            failing += std::string(" ") + s + "(not classified monotone)";
            continue;
        }
        if (!weakly_precedes(compare(lo, f, grid)) || !weakly_precedes(compare(f, hi, grid))) {
            ok = false;
            failing += std::string(" ") + s;
        }
    }
    return {"rRLD <= monotone f <= SLD", ok, 0.0,
            ok ? std::to_string(std::size(specs)) + " monotone functions" : "failing:" + failing};
}

PropertyCheck regimes() {
    const auto grid = log_grid();
    const double a1[] = {0.05, 0.2, 0.45};
    const double a2[] = {-5.0, -1.0, 0.5, 0.8, 3.0};
    const double a3[] = {-0.95, -0.5, -0.1};
    bool ok = true;
    for (const double x : a1) {
        for (const double y : a2) {
            ok = ok && weakly_precedes(compare(PetzFunction::sandwiched(y),
                                               PetzFunction::sandwiched(x), grid));
        }
    }
    for (const double y : a2) {
        for (const double z : a3) {
            ok = ok && weakly_precedes(compare(PetzFunction::sandwiched(z),
                                               PetzFunction::sandwiched(y), grid));
        }
    }
    return {"sw three-regime ordering", ok, 0.0, "alpha1 in (0,1/2) >= alpha2 >= alpha3 in (-1,0)"};
}

PropertyCheck probe(const char *spec, int samples, std::uint64_t seed) {
    const ProbeResult r = monotonicity_probe(P(spec), samples, seed);
    return {std::string("monotone contraction ") + spec, r.max_violation <= kProbeTol,
            r.max_violation, std::to_string(samples) + " channel triples"};
}

PropertyCheck metric_oracle(int instances, std::uint64_t seed) {
    const char *specs[] = {"sld", "bkm", "rrld", "half", "sw:0.1", "sw:2", "sw:-1", "st:0.5"};
    double worst = 0.0;
    int index = 0;
    for (const Eigen::Index d : {2, 4}) {
        for (int i = 0; i < instances; ++i) {
            Rng rng = make_rng(seed, 1000000 + static_cast<std::uint64_t>(index++));
            const LinearFamily fam = random_family(d, 3, rng);
            const RVector theta = RVector::Zero(3);
            const StateMap state = [&fam](const RVector &t) { return fam.at(t); };
            for (const char *s : specs) {
                const PetzFunction f = P(s);
                const RMatrix g = metric(fam.base, fam.directions, f);
                const RMatrix h = fd_hessian(*hessian_divergence(f), state, theta, 1e-3);
                worst = std::max(worst, (g - h).norm() / g.norm());
            }
        }
    }
    return {"metric equals divergence Hessian", worst < kOracleTol, worst,
            std::to_string(2 * instances) + " random states x 8 functions, relative error"};
}

PropertyCheck order_transfer(int instances, std::uint64_t seed) {
    const std::vector<std::pair<PetzFunction, PetzFunction>> pairs = {
        {P("rrld"), P("sld")},   {P("rrld"), P("bkm")},     {P("bkm"), P("sld")},
        {P("sw:0.5"), P("sw:0.1")}, {P("sw:-0.5"), P("sw:2")}, {P("half"), P("sld")}};
    const auto grid = log_grid();
    double worst = std::numeric_limits<double>::infinity();
    for (const auto &[f, g] : pairs) {
        if (compare(f, g, grid) != Order::Precedes) {
            return {"order transfer to metrics", false, 0.0, "pair not ordered: " + f.to_string()};
        }
    }
    for (int i = 0; i < instances; ++i) {
        Rng rng = make_rng(seed, 2000000 + static_cast<std::uint64_t>(i));
        const Eigen::Index d = (i % 2 == 0) ? 2 : 4;
        const LinearFamily fam = random_family(d, 4, rng);
        for (const auto &[f, g] : pairs) {
            const RMatrix gf = metric(fam.base, fam.directions, f);
            const RMatrix gg = metric(fam.base, fam.directions, g);
            worst = std::min(worst, hermitian_eig(RMatrix(gf - gg)).eigenvalues(0));
            worst = std::min(worst,
                             hermitian_eig(RMatrix(diagonal(gf) - diagonal(gg))).eigenvalues(0));
        }
    }
    return {"order transfer to metrics", worst >= -kOrderTol, worst,
            std::to_string(instances) + " instances, min eigenvalue of G_f - G_g (full and diagonal)"};
}

PropertyCheck f_identity() {
    double worst = 0.0;
    for (const double a : {-0.5, 0.0, 0.5, 1.0, -1.0, 3.0}) {
        worst = std::max(worst, f_divergence_consistency(a));
    }
    return {"F-divergence identity", worst < kIdentityTol, worst, "alpha in {-1,-0.5,0,0.5,1,3}"};
}

} // namespace

bool PropertyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck &c) { return c.passed; });
}

std::string PropertyReport::text() const {
    std::ostringstream out;
    for (const PropertyCheck &c : checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  value=" << fmt(c.value)
            << "  (" << c.detail << ")\n";
    }
    if (witness) {
        out << "witness sw:0.25 non-monotone: sample=" << witness->sample
            << " channel=" << witness->channel << " g_before=" << fmt(witness->before)
            << " g_after=" << fmt(witness->after) << "\n";
    } else {
        out << "witness sw:0.25 non-monotone: none found\n";
    }
    out << (passed() ? "all properties hold" : "property failures present") << "\n";
    return out.str();
}

PropertyReport run_properties(std::uint64_t seed, int samples) {
    if (samples < 1) {
        throw DomainError("run_properties: need at least one sample");
    }
    PropertyReport r;
    r.checks.push_back(coincidences());
    r.checks.push_back(conditions());
    r.checks.push_back(extremal_order());
    r.checks.push_back(regimes());
    for (const char *s : {"sld", "rrld", "bkm", "half", "sw:2"}) {
        r.checks.push_back(probe(s, samples, seed));
    }
    r.checks.push_back(metric_oracle(std::max(1, samples / 25), seed));
    r.checks.push_back(order_transfer(std::max(1, samples / 5), seed));
    r.checks.push_back(f_identity());
    r.witness = monotonicity_probe(P("sw:0.25"), samples, seed).witness;
    return r;
}

} // namespace qngm
