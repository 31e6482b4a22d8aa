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

// Command-line front end: runs benchmark experiments and the property report.

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "qngm/experiment.hpp"
#include "qngm/properties.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitProperty = 4;

std::uint64_t properties_seed(const CLI::Option *opt, std::uint64_t flag_value) {
    if (opt->count() > 0) {
        return flag_value;
    }
    if (const char *env = std::getenv("QNGM_SEED"); env != nullptr && *env != '\0') {
        return qngm::load_config({{"seed", env, "QNGM_SEED"}}).seed;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum natural gradient with Petz-function metrics.\n"
                 "Without a subcommand, runs the configured experiment and writes CSV."};
    app.set_help_all_flag("--help-all", "Expand all help");

    std::string config_path;
    app.add_option("--config", config_path, "Flat 'key = value' config file")
        ->check(CLI::ExistingFile);

    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option *> options;
    bool diagonal = false;
    for (const std::string &key : qngm::config_keys()) {
        if (key == "diagonal") {
            options[key] = app.add_flag("--diagonal", diagonal, "Use the diagonal metric");
        } else {
            options[key] = app.add_option("--" + key, values[key], "Config key '" + key + "'");
        }
    }

    auto *props = app.add_subcommand("properties", "Run the invariant suites and print a report");
    std::uint64_t seed = 0;
    int samples = 500;
    auto *seed_opt = props->add_option("--seed", seed, "Seed (falls back to QNGM_SEED)");
    props->add_option("--samples", samples, "Channel triples per monotonicity probe")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    if (props->parsed()) {
        try {
            const qngm::PropertyReport report =
                qngm::run_properties(properties_seed(seed_opt, seed), samples);
            std::cout << report.text();
            return report.passed() ? 0 : kExitProperty;
        } catch (const qngm::ConfigError &e) {
            std::cerr << e.category() << ": " << e.what() << '\n';
            return kExitConfig;
        } catch (const qngm::Error &e) {
            std::cerr << e.category() << ": " << e.what() << '\n';
            return kExitNumerical;
        }
    }

    try {
        std::vector<qngm::ConfigEntry> entries;
        if (!config_path.empty()) {
            entries = qngm::read_config_file(config_path);
        }
        for (const std::string &key : qngm::config_keys()) {
            if (options[key]->count() == 0) {
                continue;
            }
            entries.push_back({key, key == "diagonal" ? (diagonal ? "true" : "false") : values[key],
                               "--" + key});
        }
        const qngm::ExperimentConfig config = qngm::load_config(entries);
        const auto runs = qngm::run_experiment(config, std::cout);
        for (const auto &r : runs) {
            if (r.trajectory.failed()) {
                std::cerr << r.trajectory.error_category << ": " << r.trajectory.error_message
                          << '\n';
                return kExitNumerical;
            }
        }
        return 0;
    } catch (const qngm::ConfigError &e) {
        std::cerr << e.category() << ": " << e.what() << '\n';
        return kExitConfig;
    } catch (const qngm::Error &e) {
        std::cerr << e.category() << ": " << e.what() << '\n';
        return kExitNumerical;
    }
}
