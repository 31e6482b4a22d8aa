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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qngm/qfim.hpp"

namespace qngm {

struct PropertyCheck {
    std::string name;
    bool passed;
    /// Worst observed value of the checked quantity.
    double value;
    std::string detail;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    /// Non-monotonicity witness for sw:0.25, if the search found one.
    std::optional<MonotonicityWitness> witness;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::string text() const;
};

/**
 * @brief Runs the Petz, metric and divergence invariant suites.
 *
 * `samples` is the number of channel triples per monotonicity probe; the
 * metric-oracle and order-transfer suites use samples / 25 and samples / 5
 * random instances (at least one each).
 */
PropertyReport run_properties(std::uint64_t seed, int samples);

} // namespace qngm
