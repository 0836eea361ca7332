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

#include "qengine/report.hpp"

#include <cstdio>
#include <string_view>

namespace qengine {

namespace {

void append_line(std::string &out, const char *fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    out += buf;
    out += '\n';
}

void append_value(std::string &out, std::string_view name, double value) {
    append_line(out, "  %-20.*s % .15g", static_cast<int>(name.size()),
                name.data(), value);
}

} // namespace

std::string format_ledger(const EnergyLedger &ledger) {
    const auto &p = ledger.params;
    std::string out;
    append_line(out, "source: %s  mode: %s  b: %.12g  gamma: %.12g  r: %.12g"
                     "  P: %.12g",
                std::string(to_string(ledger.source)).c_str(),
                std::string(to_string(p.mode)).c_str(), p.b, p.gamma, p.r,
                p.strength());
    append_line(out, "  %-6s %-22s %-22s", "stroke", "energy", "entropy");
    for (const auto &s : ledger.strokes) {
        append_line(out, "  %-6s % -22.15g % -22.15g",
                    std::string(to_string(s.name)).c_str(), s.energy_after,
                    s.entropy_after);
    }
    append_value(out, "q_in", ledger.q_in);
    append_value(out, "q_out", ledger.q_out);
    append_value(out, "w_api", ledger.w_api);
    append_value(out, "w_apii", ledger.w_apii);
    append_value(out, "delta", ledger.delta);
    append_value(out, "w_ext", ledger.w_ext);
    append_value(out, "eta", ledger.eta);
    if (ledger.realizable) {
        append_value(out, "q_used", ledger.q_used);
    } else {
        append_line(out, "  %-20s %s", "q_used", "none (unrealizable)");
    }
    append_value(out, "first_law_residual", ledger.energy_balance());
    if (!ledger.valid) {
        append_line(out, "%s", "  note: gamma outside the engine-valid range");
    } else if (!ledger.realizable) {
        append_line(out, "%s", "  note: formula-only, no isentropic second channel");
    }
    if (!ledger.eta_defined) {
        append_line(out, "%s", "  note: q_in = 0, eta reported as 0");
    }
    return out;
}

std::string format_verify_report(const VerifyReport &report) {
    std::string out;
    for (const auto &f : report.failures) {
        append_line(out, "FAIL %s [%s] observed=%.15g expected=%.15g tol=%g",
                    f.check.c_str(), f.parameters.c_str(), f.observed,
                    f.expected, f.tolerance);
    }
    append_line(out, "verify: %zu checks, %zu failures, %.3f s",
                report.checks_run, report.failures.size(),
                report.elapsed.count());
    return out;
}

} // namespace qengine
