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

#include "qengine/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qengine {

void SweepSpec::validate() const {
    if (b_values.empty() || gamma_values.empty() || r_values.empty()) {
        throw InvalidParameterError("sweep grids must be non-empty");
    }
    for (double b : b_values) {
        for (double gamma : gamma_values) {
            for (double r : r_values) {
                CycleParams{b, gamma, r, mode}.validate();
            }
        }
    }
}

SweepRow evaluate_point(const CycleParams &params) {
    const auto analytic = run_analytic(params);
    std::optional<EnergyLedger> numeric;
    if (analytic.valid && analytic.realizable) {
        numeric = run_numeric(params);
    }
    const auto &used = numeric ? *numeric : analytic;

    SweepRow row;
    row.params = params;
    row.strength = params.strength();
    if (numeric) {
        row.q = numeric->q_used;
        row.eta_numeric = numeric->eta;
    }
    row.q_in = used.q_in;
    row.q_out = used.q_out;
    row.w_api = used.w_api;
    row.w_apii = used.w_apii;
    row.delta = used.delta;
    row.w_ext = used.w_ext;
    row.eta_analytic = analytic.eta;
    row.entropy_after_qmi = used.stroke(StrokeName::QMI).entropy_after;
    row.entropy_after_qmii = used.stroke(StrokeName::QMII).entropy_after;
    row.first_law_residual = used.energy_balance();
    row.valid = analytic.valid;
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
    spec.validate();
    std::vector<SweepRow> rows;
    rows.reserve(spec.b_values.size() * spec.gamma_values.size() *
                 spec.r_values.size());
    for (double b : spec.b_values) {
        for (double gamma : spec.gamma_values) {
            for (double r : spec.r_values) {
                rows.push_back(evaluate_point({b, gamma, r, spec.mode}));
            }
        }
    }
    return rows;
}

std::string format_real(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string format_csv_row(const SweepRow &row) {
    const auto opt = [](const std::optional<double> &v) {
        return v ? format_real(*v) : std::string{};
    };
    std::string line;
    line += to_string(row.params.mode);
    for (const auto &field :
         {format_real(row.params.b), format_real(row.params.gamma),
          format_real(row.params.r), format_real(row.strength), opt(row.q),
          format_real(row.q_in), format_real(row.q_out),
          format_real(row.w_api), format_real(row.w_apii),
          format_real(row.delta), format_real(row.w_ext),
          format_real(row.eta_analytic), opt(row.eta_numeric),
          format_real(row.entropy_after_qmi),
          format_real(row.entropy_after_qmii),
          format_real(row.first_law_residual),
          std::string(row.valid ? "1" : "0")}) {
        line += ',';
        line += field;
    }
    return line;
}

std::string sweep_csv(const SweepSpec &spec) {
    std::string out(kSweepHeader);
    out += '\n';
    for (const auto &row : run_sweep(spec)) {
        out += format_csv_row(row);
        out += '\n';
    }
    return out;
}

void write_sweep(const SweepSpec &spec) {
    const auto csv = sweep_csv(spec);
    if (spec.output_path == "-") {
        std::cout << csv;
        return;
    }
    std::ofstream out(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw OutputError("cannot write sweep output: " +
                    spec.output_path.string());
    }
    out << csv;
    if (!out.flush()) {
        throw OutputError("failed writing sweep output: " +
                    spec.output_path.string());
    }
}

} // namespace qengine
