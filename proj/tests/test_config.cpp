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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qngm/experiment.hpp"

using namespace qngm;
using Catch::Approx;

namespace {

std::vector<ConfigEntry> entries(const std::string &text) { return parse_config_text(text, "test"); }

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string &name) {
    const auto dir = std::filesystem::temp_directory_path() / "qngm_test_config";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("defaults are the single-qubit benchmark settings", "[config]") {
    const ExperimentConfig c = load_config(std::vector<ConfigEntry>{{"seed", "0", "test"}});
    CHECK(c.experiment == "single-qubit");
    CHECK(c.metric == "sld");
    CHECK(c.rule == UpdateRule::Trust);
    CHECK(c.epsilon == 1e-6);
    CHECK(c.eta == 1e-3);
    CHECK(c.delta == 1e-3);
    CHECK(c.xi == 1e-3);
    CHECK(c.rank_tol == 1e-9);
    CHECK(c.steps == 2000);
    CHECK(c.stall_stop);
    CHECK_FALSE(c.diagonal);
    const ExperimentSetup s = build_setup(c);
    const double pi = std::numbers::pi;
    CHECK(s.theta0 == RVector{{pi / 2, pi / 2, pi / 4}});
    CHECK(std::get<StateDistanceCost>(s.cost).target == RVector::Zero(3));
}

TEST_CASE("config text parsing", "[config]") {
    const auto e = entries("# comment\nmetric = sw:0.1  # trailing\n\nrank_tol = 1e-8\nrule=lr\n");
    REQUIRE(e.size() == 3);
    CHECK(e[0].key == "metric");
    CHECK(e[0].value == "sw:0.1");
    CHECK(e[1].key == "rank-tol");
    const ExperimentConfig c = load_config(e);
    CHECK(c.metric == "sw:0.1");
    CHECK(c.rank_tol == 1e-8);
    CHECK(c.rule == UpdateRule::LearningRate);
    CHECK_THROWS_AS(entries("metric sld\n"), ParseError);
}

TEST_CASE("later entries override earlier ones", "[config]") {
    auto e = entries("metric = sld\nsteps = 10\n");
    e.push_back({"metric", "rrld", "--metric"});
    const ExperimentConfig c = load_config(e);
    CHECK(c.metric == "rrld");
    CHECK(c.steps == 10);
}

TEST_CASE("config errors", "[config]") {
    CHECK_THROWS_AS(load_config(entries("colour = blue\n")), ParseError);
    CHECK_THROWS_AS(load_config(entries("epsilon = abc\n")), ParseError);
    CHECK_THROWS_AS(load_config(entries("rule = newton\n")), ParseError);
    CHECK_THROWS_AS(load_config(entries("metric = sw:abc\n")), ParseError);
    CHECK_THROWS_AS(load_config(entries("xi = 1.5\n")), ValidationError);
    CHECK_THROWS_AS(load_config(entries("epsilon = -1\n")), ValidationError);
    CHECK_THROWS_AS(load_config(entries("experiment = four-qubit\n")), ValidationError);
    CHECK_THROWS_AS(load_config(entries("metric = sld\nsweep-alpha = 0.1,0.5\n")),
                    ValidationError);
    CHECK_THROWS_AS(load_config(entries("experiment = custom\ncircuit = rz:0:0\n")),
                    ValidationError);
    CHECK_THROWS_AS(load_config(std::string("/nonexistent/qngm.cfg")), ParseError);
    // Every range violation is reported at once.
    try {
        load_config(entries("xi = 1.5\ndelta = 2\n"));
        FAIL("expected ValidationError");
    } catch (const ValidationError &err) {
        const std::string msg = err.what();
        CHECK(msg.find("xi") != std::string::npos);
        CHECK(msg.find("delta") != std::string::npos);
    }
}

TEST_CASE("seed falls back to QNGM_SEED", "[config]") {
    ::setenv("QNGM_SEED", "1234", 1);
    CHECK(load_config(entries("")).seed == 1234);
    CHECK(load_config(entries("seed = 7\n")).seed == 7);
    ::setenv("QNGM_SEED", "-3", 1);
    CHECK_THROWS_AS(load_config(entries("")), ParseError);
    ::unsetenv("QNGM_SEED");
    CHECK(load_config(entries("")).seed == 0);
}

TEST_CASE("config keys are all accepted", "[config]") {
    for (const std::string &k : config_keys()) {
        CHECK_NOTHROW(parse_config_text(k + " = x\n", "test"));
    }
    CHECK(config_keys().size() == 24);
}

TEST_CASE("sw:0.5 reproduces the SLD trajectory", "[config]") {
    ExperimentConfig a;
    a.steps = 200;
    ExperimentConfig b = a;
    b.metric = "sw:0.5";
    const Trajectory ta = run(a);
    const Trajectory tb = run(b);
    REQUIRE(ta.records.size() == tb.records.size());
    for (std::size_t i = 0; i < ta.records.size(); ++i) {
        CHECK(tb.records[i].cost == Approx(ta.records[i].cost).epsilon(1e-9).margin(1e-15));
    }
}

TEST_CASE("trajectory CSV output", "[config]") {
    ExperimentConfig c;
    c.steps = 20;
    c.out = scratch("run.csv").string();
    std::ostringstream log;
    const auto runs = run_experiment(c, log);
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].path == c.out);
    CHECK(log.str().find("sld") != std::string::npos);
    const std::string first = slurp(c.out);
    std::istringstream lines(first);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "step,cost,grad_norm,metric_cond");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) {
        ++rows;
    }
    CHECK(rows == 21);
    // Runs are deterministic to the byte.
    run_experiment(c, log);
    CHECK(slurp(c.out) == first);
}

TEST_CASE("alpha sweeps write one file per member", "[config]") {
    CHECK(sweep_output_path("out/run.csv", PetzFunction::sandwiched(0.1)) == "out/run_sw_0.1.csv");
    CHECK(sweep_output_path("run", PetzFunction::sandwiched(-1)) == "run_sw_-1");
    CHECK(sweep_output_path("a.b/run", PetzFunction::sld()) == "a.b/run_sld");

    ExperimentConfig c = load_config(entries("metric = sw\nsweep-alpha = 0.1, 0.5, 2\nsteps = 5\n"));
    c.out = scratch("sweep.csv").string();
    std::ostringstream log;
    const auto runs = run_experiment(c, log);
    REQUIRE(runs.size() == 3);
    CHECK(runs[0].metric == "sw:0.1");
    CHECK(runs[2].metric == "sw:2");
    for (const RunSummary &r : runs) {
        CHECK(std::filesystem::exists(r.path));
        CHECK(r.trajectory.records.size() == 6);
    }
    const auto lin = sweep_metrics(load_config(entries("metric = lin:0:rrld:sld\nsweep-alpha = 0.5\n")));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].to_string() == "lin:0.5:rrld:sld");
}

TEST_CASE("custom circuits and observables", "[config]") {
    const ExperimentConfig c = load_config(entries(
        "experiment = custom\nqubits = 2\n"
        "circuit = r3:0:0:1:2; ry:1:3; cnot:0:1\n"
        "cost = observable\nobservable = 1.0 ZI; 0.1 XX\n"
        "theta0 = 0.1, 0.2, 0.3, 0.4\n"));
    const ExperimentSetup s = build_setup(c);
    CHECK(s.circuit.n_params() == 4);
    CHECK(s.circuit.gates().size() == 5);
    const CMatrix h = std::get<ObservableCost>(s.cost).observable;
    CHECK((h - two_qubit_hamiltonian()).norm() < 1e-15);
    const Trajectory t = run(c);
    CHECK_FALSE(t.failed());

    CHECK_THROWS_AS(load_config(entries("experiment = custom\ncircuit = rx:0:0\ntheta0 = 0\n")),
                    ParseError);
    CHECK_THROWS_AS(load_config(entries("experiment = custom\ncircuit = rz:0:0\n")),
                    ValidationError);
    CHECK_THROWS_AS(load_config(entries("experiment = custom\nqubits = 1\ncircuit = rz:0:0\n"
                                        "cost = observable\nobservable = 1 ZZ\ntheta0 = 0\n")),
                    ConfigError);
}

TEST_CASE("two-qubit energy decreases under the learning-rate rule", "[config]") {
    ExperimentConfig c = load_config(entries("experiment = two-qubit\nrule = lr\nsteps = 300\n"));
    const Trajectory t = run(c);
    REQUIRE_FALSE(t.failed());
    CHECK(t.records.back().cost < t.records.front().cost - 0.1);
    CHECK(t.records.back().cost > -std::sqrt(1.01) - 1e-9);
}
