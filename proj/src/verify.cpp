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

#include "qengine/verify.hpp"

#include "qengine/channels.hpp"
#include "qengine/engine.hpp"
#include "qengine/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qengine {

namespace {

constexpr double kLedgerTol = 1e-10;
constexpr double kExactTol = 1e-12;
constexpr double kCoherenceTol = 1e-14;

class Checker {
  public:
    explicit Checker(VerifyReport &report) : report_(report) {}

    void set_context(std::string context) { context_ = std::move(context); }

    void near(std::string_view name, double observed, double expected,
              double tolerance) {
        ++report_.checks_run;
        if (!(std::abs(observed - expected) <= tolerance)) {
            report_.failures.push_back({std::string(name), context_, observed,
                                        expected, tolerance});
        }
    }

    void at_most(std::string_view name, double observed, double bound) {
        ++report_.checks_run;
        if (!(observed <= bound)) {
            report_.failures.push_back(
                {std::string(name), context_, observed, 0.0, bound});
        }
    }

  private:
    VerifyReport &report_;
    std::string context_;
};

std::string describe(const CycleParams &p) {
    std::ostringstream out;
    out << "mode=" << to_string(p.mode) << " b=" << p.b
        << " gamma=" << p.gamma << " r=" << p.r;
    return out.str();
}

void perturb(EnergyLedger &ledger, const std::optional<std::string> &field) {
    if (!field) {
        return;
    }
    const std::string &f = *field;
    double *target = f == "qin"     ? &ledger.q_in
                     : f == "qout"  ? &ledger.q_out
                     : f == "wapi"  ? &ledger.w_api
                     : f == "wapii" ? &ledger.w_apii
                     : f == "delta" ? &ledger.delta
                     : f == "wext"  ? &ledger.w_ext
                     : f == "eta"   ? &ledger.eta
                                    : nullptr;
    if (target == nullptr) {
        throw InvalidParameterError("unknown perturb field '" + f + "'");
    }
    *target += kPerturbation;
}

void compare_ledgers(Checker &check, const EnergyLedger &a,
                     const EnergyLedger &b, double tolerance,
                     std::string_view prefix) {
    const std::string p(prefix);
    check.near(p + ".q_in", a.q_in, b.q_in, tolerance);
    check.near(p + ".q_out", a.q_out, b.q_out, tolerance);
    check.near(p + ".w_api", a.w_api, b.w_api, tolerance);
    check.near(p + ".w_apii", a.w_apii, b.w_apii, tolerance);
    check.near(p + ".delta", a.delta, b.delta, tolerance);
    check.near(p + ".w_ext", a.w_ext, b.w_ext, tolerance);
    check.near(p + ".eta", a.eta, b.eta, tolerance);
    check.near(p + ".q_used", a.q_used, b.q_used, tolerance);
}

void check_second_stroke(Checker &check, const EnergyLedger &ledger) {
    const auto &qmi = ledger.stroke(StrokeName::QMI);
    const auto &qmii = ledger.stroke(StrokeName::QMII);
    check.near("entropy_equality", qmii.entropy_after, qmi.entropy_after,
               kExactTol);
    auto before = qmi.state_after.populations();
    std::reverse(before.begin(), before.end());
    const auto after = qmii.state_after.populations();
    double swap_err = 0.0;
    for (std::size_t i = 0; i < after.size(); ++i) {
        swap_err = std::max(swap_err, std::abs(after[i] - before[i]));
    }
    check.at_most("population_swap", swap_err, kExactTol);

    double coherence = 0.0;
    for (const auto &s : ledger.strokes) {
        coherence = std::max(coherence, max_off_diagonal(s.state_after.matrix()));
    }
    check.at_most("no_coherence", coherence, kCoherenceTol);
}

void check_cycle(Checker &check, const CycleParams &p,
                 const VerifyOptions &options) {
    check.set_context(describe(p));
    const auto analytic = run_analytic(p);
    check.near("analytic_energy_balance", analytic.energy_balance(), 0.0,
               kExactTol);
    if (!analytic.valid || !analytic.realizable) {
        return;
    }

    auto numeric = run_numeric(p);
    perturb(numeric, options.perturb);

    check.near("completeness.first_channel",
               validate_completeness(first_channel(p.strength())).deviation,
               0.0, tol::kCompleteness);
    check.near("completeness.second_channel",
               validate_completeness(second_channel(numeric.q_used)).deviation,
               0.0, tol::kCompleteness);

    compare_ledgers(check, numeric, analytic, kLedgerTol, "oracle");
    const double eta_law =
        p.mode == CycleMode::ThreeStroke
            ? 2.0 - 1.0 / p.gamma
            : 1.0 + (1.0 / p.r) * (p.gamma - 1.0) / p.gamma;
    check.near("efficiency_law", numeric.eta, eta_law, kLedgerTol);
    check.near("efficiency_range", std::clamp(numeric.eta, 0.0, 1.0),
               numeric.eta, kLedgerTol);
    check.near("work_bookkeeping", numeric.w_ext,
               numeric.q_in + numeric.q_out, kExactTol);
    check_second_stroke(check, numeric);

    if (p.mode == CycleMode::FiveStroke) {
        check.near("first_law", first_law_residual(numeric), 0.0, kExactTol);
        check.near("adiabat_entropy.API",
                   numeric.stroke(StrokeName::API).entropy_after,
                   numeric.stroke(StrokeName::TP).entropy_after, 0.0);
        check.near("adiabat_entropy.APII",
                   numeric.stroke(StrokeName::APII).entropy_after,
                   numeric.stroke(StrokeName::QMII).entropy_after, 0.0);
        if (p.r == 1.0) {
            auto three = run_three_stroke_numeric(
                {p.b, p.gamma, 1.0, CycleMode::ThreeStroke});
            perturb(three, options.perturb);
            compare_ledgers(check, numeric, three, kExactTol, "reduction");
        }
    }
}

void check_special_points(Checker &check, double b) {
    const auto h = Hamiltonian::qubit(1.0);
    const auto thermal = gibbs_state(h, ThermalParams(b));
    std::ostringstream ctx;
    ctx << "b=" << b;
    check.set_context(ctx.str());

    const auto mixed = apply_unselective(
        first_channel(isentropic_threshold(b)), thermal);
    check.at_most("maximal_mixing.trace_distance",
                  trace_distance(mixed, DensityMatrix::maximally_mixed(2)),
                  kExactTol);
    check.near("maximal_mixing.energy", mean_energy(mixed, h), 0.0,
               kExactTol);

    const double crossover = -std::expm1(-b);
    const auto pumped = apply_unselective(first_channel(crossover), thermal);
    check.near("entropy_crossover.entropy", von_neumann_entropy(pumped),
               von_neumann_entropy(thermal), kExactTol);
    check.near("entropy_crossover.heat",
               mean_energy(pumped, h) - mean_energy(thermal, h),
               std::tanh(0.5 * b), kExactTol);
}

} // namespace

VerifyReport run_verify(const VerifyOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    if (options.perturb &&
        std::find(std::begin(kPerturbFields), std::end(kPerturbFields),
                  *options.perturb) == std::end(kPerturbFields)) {
        throw InvalidParameterError("unknown perturb field '" +
                                    *options.perturb + "'");
    }
    if (options.b_grid.empty() || options.gamma_grid.empty() ||
        options.r_grid.empty()) {
        throw InvalidParameterError("verify grids must be non-empty");
    }

    VerifyReport report;
    Checker check(report);
    for (double b : options.b_grid) {
        check_special_points(check, b);
        for (double gamma : options.gamma_grid) {
            check_cycle(check, {b, gamma, 1.0, CycleMode::ThreeStroke},
                        options);
            for (double r : options.r_grid) {
                check_cycle(check, {b, gamma, r, CycleMode::FiveStroke},
                            options);
            }
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace qengine
