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

#include "qengine/engine.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qengine {

/// Sweep output could not be written.
class OutputError : public Error {
  public:
    using Error::Error;
};

inline constexpr std::string_view kSweepHeader =
    "mode,b,gamma,r,P,q,Q_in,Q_out,W_api,W_apii,Delta,W_ext,eta_analytic,"
    "eta_numeric,S_after_QMI,S_after_QMII,first_law_residual,valid";

struct SweepSpec {
    CycleMode mode = CycleMode::ThreeStroke;
    std::vector<double> b_values;
    std::vector<double> gamma_values;
    std::vector<double> r_values{1.0};
    /// "-" writes to standard output.
    std::filesystem::path output_path;

    /// Throws InvalidParameterError for empty lists or out-of-range values.
    void validate() const;
};

/// One grid point. Energies come from the numeric ledger when the cycle is
/// realizable and from the closed forms otherwise.
struct SweepRow {
    CycleParams params{};
    double strength = 0.0;
    std::optional<double> q{};
    double q_in = 0.0;
    double q_out = 0.0;
    double w_api = 0.0;
    double w_apii = 0.0;
    double delta = 0.0;
    double w_ext = 0.0;
    double eta_analytic = 0.0;
    std::optional<double> eta_numeric{};
    double entropy_after_qmi = 0.0;
    double entropy_after_qmii = 0.0;
    double first_law_residual = 0.0;
    bool valid = false;
};

[[nodiscard]] SweepRow evaluate_point(const CycleParams &params);

/// Rows in grid order: b outer, gamma middle, r inner.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepSpec &spec);

/// %.12g, with negative zero printed as 0.
[[nodiscard]] std::string format_real(double value);
[[nodiscard]] std::string format_csv_row(const SweepRow &row);

/// Header line plus one line per row, each terminated by '\n'.
[[nodiscard]] std::string sweep_csv(const SweepSpec &spec);

/// Writes sweep_csv(spec) to spec.output_path. Throws OutputError if the path
/// cannot be written.
void write_sweep(const SweepSpec &spec);

} // namespace qengine
