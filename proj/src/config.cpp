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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qngm/experiment.hpp"

namespace qngm {

namespace {

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '_', '-');
    return key;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(trim(cur));
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

[[noreturn]] void bad_value(const ConfigEntry &e, const std::string &expected) {
    throw ParseError(e.origin + ": " + e.key + " = '" + e.value + "' is not " + expected);
}

double to_double(const ConfigEntry &e, const std::string &text) {
    const std::string t = trim(text);
    char *end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
        bad_value(e, "a number");
    }
    return v;
}

double to_double(const ConfigEntry &e) { return to_double(e, e.value); }

long long to_integer(const ConfigEntry &e) {
    const std::string t = trim(e.value);
    char *end = nullptr;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size()) {
        bad_value(e, "an integer");
    }
    return v;
}

std::uint64_t to_seed(const std::string &text, const std::string &origin) {
    const std::string t = trim(text);
    char *end = nullptr;
    const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
    if (t.empty() || t.front() == '-' || end != t.c_str() + t.size()) {
        throw ParseError(origin + ": seed '" + text + "' is not a non-negative integer");
    }
    return v;
}

bool to_bool(const ConfigEntry &e) {
    std::string t = trim(e.value);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "true" || t == "1" || t == "yes" || t == "on") {
        return true;
    }
    if (t == "false" || t == "0" || t == "no" || t == "off") {
        return false;
    }
    bad_value(e, "a boolean");
}

std::vector<double> to_list(const ConfigEntry &e) {
    std::vector<double> out;
    if (trim(e.value).empty()) {
        return out;
    }
    for (const std::string &part : split(e.value, ',')) {
        out.push_back(to_double(e, part));
    }
    return out;
}

std::vector<std::array<double, 3>> to_bloch(const ConfigEntry &e) {
    std::vector<std::array<double, 3>> out;
    for (const std::string &qubit : split(e.value, ';')) {
        const auto xyz = split(qubit, ',');
        if (xyz.size() != 3) {
            bad_value(e, "a ';'-separated list of x,y,z triples");
        }
        out.push_back({to_double(e, xyz[0]), to_double(e, xyz[1]), to_double(e, xyz[2])});
    }
    return out;
}

} // namespace

const std::vector<std::string> &config_keys() {
    static const std::vector<std::string> keys = {
        "experiment", "metric",    "rule",       "epsilon",  "eta",        "delta",
        "xi",         "rank-tol",  "steps",      "grad-tol", "seed",       "out",
        "diagonal",   "stall-stop", "sweep-alpha", "theta0", "theta-star", "bloch",
        "omega",      "coupling",  "qubits",     "circuit",  "cost",       "observable"};
    return keys;
}

std::vector<ConfigEntry> parse_config_text(const std::string &text, const std::string &origin) {
    std::vector<ConfigEntry> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string where = origin + ":" + std::to_string(lineno);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(where + ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = normalize_key(trim(line.substr(0, eq)));
        if (key.empty()) {
            throw ParseError(where + ": missing key");
        }
        entries.push_back({key, trim(line.substr(eq + 1)), where});
    }
    return entries;
}

std::vector<ConfigEntry> read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

ExperimentConfig load_config(const std::string &path) {
    return load_config(read_config_file(path));
}

ExperimentConfig load_config(const std::vector<ConfigEntry> &raw) {
    ExperimentConfig c;
    bool seed_given = false;
    for (const ConfigEntry &given : raw) {
        ConfigEntry e = given;
        e.key = normalize_key(e.key);
        const std::string &k = e.key;
        if (k == "experiment") {
            c.experiment = e.value;
        } else if (k == "metric") {
            c.metric = e.value;
        } else if (k == "rule") {
            if (e.value == "trust") {
                c.rule = UpdateRule::Trust;
            } else if (e.value == "lr") {
                c.rule = UpdateRule::LearningRate;
            } else {
                bad_value(e, "'trust' or 'lr'");
            }
        } else if (k == "epsilon") {
            c.epsilon = to_double(e);
        } else if (k == "eta") {
            c.eta = to_double(e);
        } else if (k == "delta") {
            c.delta = to_double(e);
        } else if (k == "xi") {
            c.xi = to_double(e);
        } else if (k == "rank-tol") {
            c.rank_tol = to_double(e);
        } else if (k == "steps") {
            const long long v = to_integer(e);
            if (v < 0 || v > 100000000) {
                bad_value(e, "a step count in [0, 1e8]");
            }
            c.steps = static_cast<int>(v);
        } else if (k == "grad-tol") {
            c.grad_tol = to_double(e);
        } else if (k == "seed") {
            c.seed = to_seed(e.value, e.origin);
            seed_given = true;
        } else if (k == "out") {
            c.out = e.value;
        } else if (k == "diagonal") {
            c.diagonal = to_bool(e);
        } else if (k == "stall-stop") {
            c.stall_stop = to_bool(e);
        } else if (k == "sweep-alpha") {
            c.sweep_alpha = to_list(e);
        } else if (k == "theta0") {
            c.theta0 = to_list(e);
        } else if (k == "theta-star") {
            c.theta_star = to_list(e);
        } else if (k == "bloch") {
            c.bloch = to_bloch(e);
        } else if (k == "omega") {
            c.omega = to_double(e);
        } else if (k == "coupling") {
            c.coupling = to_double(e);
        } else if (k == "qubits") {
            const long long v = to_integer(e);
            if (v < 1 || v > 4) {
                bad_value(e, "a qubit count in [1, 4]");
            }
            c.qubits = static_cast<int>(v);
        } else if (k == "circuit") {
            c.circuit = e.value;
        } else if (k == "cost") {
            c.cost = e.value;
        } else if (k == "observable") {
            c.observable = e.value;
        } else {
            throw ParseError(e.origin + ": unknown key '" + given.key + "'");
        }
    }
    if (!seed_given) {
        if (const char *env = std::getenv("QNGM_SEED"); env != nullptr && *env != '\0') {
            c.seed = to_seed(env, "QNGM_SEED");
        }
    }

    std::vector<std::string> violations;
    auto check = [&violations](bool ok, const std::string &msg) {
        if (!ok) {
            violations.push_back(msg);
        }
    };
    const std::vector<std::string> experiments = {"single-qubit", "two-qubit",
                                                  "three-qubit-heisenberg", "custom"};
    const bool known_experiment =
        std::find(experiments.begin(), experiments.end(), c.experiment) != experiments.end();
    check(known_experiment, "unknown experiment '" + c.experiment + "'");
    check(c.delta >= 0.0 && c.delta < 1.0, "delta must lie in [0, 1)");
    check(c.xi >= 0.0 && c.xi < 1.0, "xi must lie in [0, 1)");
    check(c.epsilon > 0.0, "epsilon must be positive");
    check(c.eta > 0.0, "eta must be positive");
    check(c.rank_tol > 0.0, "rank-tol must be positive");
    check(c.grad_tol >= 0.0, "grad-tol must be non-negative");
    check(c.cost == "distance" || c.cost == "observable", "cost must be 'distance' or 'observable'");
    check(!c.out.empty(), "out must name a file");
    try {
        (void)sweep_metrics(c);
    } catch (const ParseError &) {
        throw;
    } catch (const Error &err) {
        violations.emplace_back(err.what());
    }
    if (known_experiment) {
        try {
            (void)build_setup(c);
        } catch (const ParseError &) {
            throw;
        } catch (const Error &err) {
            violations.emplace_back(err.what());
        }
    }
    if (!violations.empty()) {
        std::string msg = "invalid configuration:";
        for (const std::string &v : violations) {
            msg += "\n  - " + v;
        }
        throw ValidationError(msg);
    }
    return c;
}

} // namespace qngm
