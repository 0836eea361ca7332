// Copyright 2026 The qengine Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qengine {

/// Ledger fields that `--perturb` may shift.
inline constexpr std::string_view kPerturbFields[] = {
    "qin", "qout", "wapi", "wapii", "delta", "wext", "eta"};

/// Amount added to the perturbed field of every numeric ledger.
inline constexpr double kPerturbation = 0.1;

struct VerifyOptions {
    std::vector<double> b_grid{0.1, 0.69314718055994530942, 1.0, 5.0};
    std::vector<double> gamma_grid{0.5, 0.6, 0.75, 0.9, 1.0};
    std::vector<double> r_grid{1.0, 2.0, 5.0};
    std::optional<std::string> perturb;
};

struct VerifyFailure {
    std::string check;
    std::string parameters;
    double observed;
    double expected;
    double tolerance;
};

struct VerifyReport {
    std::size_t checks_run = 0;
    std::vector<VerifyFailure> failures;
    std::chrono::duration<double> elapsed{};

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

/**
 * @brief Cross-checks numeric cycles against the closed forms on a grid.
 *
 * Runs channel completeness, entropy equality and population swap of the
 * second stroke, absence of coherences, numeric/analytic agreement of every
 * ledger entry, the efficiency laws, first-law residuals, the r = 1
 * reduction, and the maximal-mixing and entropy-crossover special points.
 * Grid values outside a cycle's realizable range are checked analytically
 * only. Throws InvalidParameterError for an unknown perturb field or an
 * invalid grid value.
 */
[[nodiscard]] VerifyReport run_verify(const VerifyOptions &options);

} // namespace qengine
