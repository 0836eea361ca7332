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

#include "qengine/engine.hpp"

#include <cmath>
#include <sstream>

namespace qengine {

namespace {

constexpr double kReferenceFrequency = 1.0;

void require_mode(const CycleParams &p, CycleMode expected, const char *who) {
    if (p.mode != expected) {
        throw InvalidCycleError(std::string(who) + " requires mode " +
                                std::string(to_string(expected)));
    }
}

std::string bound_message(CycleMode mode, double r, double gamma) {
    const auto [lo, hi] = gamma_bounds(mode, r);
    std::ostringstream msg;
    msg << "gamma = " << gamma << " violates the " << to_string(mode)
        << "-stroke bound ";
    if (mode == CycleMode::ThreeStroke) {
        msg << "1/2 <= gamma <= 1";
    } else {
        msg << "1/(1+r) <= gamma <= 1 (" << lo << " <= gamma <= " << hi
            << " at r = " << r << ")";
    }
    return msg.str();
}

bool within_bounds(const CycleParams &p) {
    const auto [lo, hi] = gamma_bounds(p.mode, p.r);
    return p.gamma >= lo && p.gamma <= hi;
}

StrokeRecord record(StrokeName name, DensityMatrix state, Hamiltonian h) {
    const double energy = mean_energy(state, h);
    const double entropy = von_neumann_entropy(state);
    return {name, std::move(state), std::move(h), energy, entropy};
}

// Analytic record: energy from the closed form, entropy from the state.
StrokeRecord analytic_record(StrokeName name, double ground, double excited,
                             double frequency, double energy) {
    auto state = DensityMatrix::from_populations({ground, excited});
    const double entropy = von_neumann_entropy(state);
    return {name, std::move(state), Hamiltonian::qubit(frequency), energy,
            entropy};
}

void finish_efficiency(EnergyLedger &ledger) {
    if (ledger.q_in == 0.0) {
        ledger.eta = 0.0;
        ledger.eta_defined = false;
    } else {
        ledger.eta = ledger.w_ext / ledger.q_in;
    }
}

// Populations of the Gibbs state and the closed-form energy scales shared by
// both analytic cycles.
struct ClosedForm {
    double ground;   // e^{b/2} / Z
    double excited;  // e^{-b/2} / Z
    double tanh_half;
    double pumped;   // P e^{b/2} / Z, the energy imported per unit spacing
};

ClosedForm closed_form(const CycleParams &p) {
    const double boltzmann = std::exp(-p.b);
    const double ground = 1.0 / (1.0 + boltzmann);
    return {ground, boltzmann / (1.0 + boltzmann), std::tanh(0.5 * p.b),
            p.strength() * ground};
}

} // namespace

std::string_view to_string(CycleMode mode) noexcept {
    switch (mode) {
    case CycleMode::ThreeStroke:
        return "three";
    case CycleMode::FiveStroke:
        return "five";
    }
    return "?";
}

std::string_view to_string(StrokeName name) noexcept {
    switch (name) {
    case StrokeName::TP:
        return "TP";
    case StrokeName::API:
        return "API";
    case StrokeName::QMI:
        return "QMI";
    case StrokeName::QMII:
        return "QMII";
    case StrokeName::APII:
        return "APII";
    }
    return "?";
}

std::string_view to_string(LedgerSource source) noexcept {
    return source == LedgerSource::Numeric ? "numeric" : "analytic";
}

void CycleParams::validate() const {
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw InvalidParameterError("b must be finite and > 0");
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        std::ostringstream msg;
        msg << "gamma must lie in [0, 1], got " << gamma;
        throw InvalidParameterError(msg.str());
    }
    if (!(r >= 1.0) || !std::isfinite(r)) {
        std::ostringstream msg;
        msg << "frequency ratio r must be finite and >= 1, got " << r;
        throw InvalidParameterError(msg.str());
    }
    if (mode == CycleMode::ThreeStroke && r != 1.0) {
        throw InvalidParameterError("three-stroke cycle requires r == 1");
    }
}

double CycleParams::strength() const { return -gamma * std::expm1(-b); }

std::pair<double, double> gamma_bounds(CycleMode mode, double r) {
    if (!(r >= 1.0)) {
        throw InvalidParameterError("gamma_bounds: r must be >= 1");
    }
    if (mode == CycleMode::ThreeStroke) {
        return {0.5, 1.0};
    }
    return {1.0 / (1.0 + r), 1.0};
}

const StrokeRecord &EnergyLedger::stroke(StrokeName name) const {
    for (const auto &s : strokes) {
        if (s.name == name) {
            return s;
        }
    }
    throw Error("ledger has no " + std::string(to_string(name)) + " stroke");
}

double EnergyLedger::energy_balance() const noexcept {
    return q_out + q_in - w_api - delta - w_apii;
}

EnergyLedger run_three_stroke_numeric(const CycleParams &p) {
    p.validate();
    require_mode(p, CycleMode::ThreeStroke, "run_three_stroke_numeric");
    if (!within_bounds(p)) {
        throw InvalidCycleError(bound_message(p.mode, p.r, p.gamma));
    }

    const double strength = p.strength();
    const double q = isentropic_strength(strength, p.b);
    const auto h = Hamiltonian::qubit(kReferenceFrequency);

    EnergyLedger ledger{p, LedgerSource::Numeric, {}};
    ledger.q_used = q;
    auto thermal = gibbs_state(h, ThermalParams(p.b));
    auto measured = apply_unselective(first_channel(strength), thermal);
    auto extracted = apply_unselective(second_channel(q), measured);
    ledger.strokes.push_back(record(StrokeName::TP, std::move(thermal), h));
    ledger.strokes.push_back(record(StrokeName::QMI, std::move(measured), h));
    ledger.strokes.push_back(
        record(StrokeName::QMII, std::move(extracted), h));

    const double e_th = ledger.strokes[0].energy_after;
    const double e_m = ledger.strokes[1].energy_after;
    const double e_n = ledger.strokes[2].energy_after;
    ledger.q_in = e_m - e_th;
    ledger.q_out = e_th - e_n;
    ledger.delta = e_m - e_n;
    ledger.w_ext = ledger.q_in + ledger.q_out;
    finish_efficiency(ledger);
    return ledger;
}

EnergyLedger analytic_three_stroke(const CycleParams &p) {
    p.validate();
    require_mode(p, CycleMode::ThreeStroke, "analytic_three_stroke");
    const auto cf = closed_form(p);
    const double strength = p.strength();

    EnergyLedger ledger{p, LedgerSource::Analytic, {}};
    ledger.valid = within_bounds(p);
    ledger.realizable = p.gamma >= 0.5;
    ledger.q_used = ledger.realizable ? isentropic_strength(strength, p.b)
                                      : 0.0;

    const double e_m = -0.5 * cf.tanh_half + cf.pumped;
    const double e_n = 0.5 * cf.tanh_half - cf.pumped;
    const double ground_m = (1.0 - strength) * cf.ground;
    const double excited_m = cf.excited + strength * cf.ground;
    ledger.strokes.push_back(analytic_record(StrokeName::QMI, ground_m,
                                             excited_m, kReferenceFrequency,
                                             e_m));
    ledger.strokes.push_back(analytic_record(StrokeName::QMII, excited_m,
                                             ground_m, kReferenceFrequency,
                                             e_n));

    ledger.q_in = cf.pumped;
    ledger.delta = 2.0 * cf.pumped - cf.tanh_half;
    ledger.q_out = cf.pumped - cf.tanh_half;
    ledger.w_ext = ledger.delta;
    if (ledger.q_in == 0.0) {
        ledger.eta = 0.0;
        ledger.eta_defined = false;
    } else {
        ledger.eta = 2.0 - 1.0 / p.gamma;
    }
    return ledger;
}

EnergyLedger run_five_stroke_numeric(const CycleParams &p) {
    p.validate();
    require_mode(p, CycleMode::FiveStroke, "run_five_stroke_numeric");
    if (!within_bounds(p)) {
        throw InvalidCycleError(bound_message(p.mode, p.r, p.gamma));
    }
    if (p.gamma < 0.5) {
        std::ostringstream msg;
        msg << "isentropic channel unrealizable: gamma = " << p.gamma
            << " < 1/2 gives a negative second-channel strength";
        throw UnrealizableChannelError(msg.str());
    }

    const double strength = p.strength();
    const double q = isentropic_strength(strength, p.b);
    const auto h_ref = Hamiltonian::qubit(kReferenceFrequency);
    const auto h_wide = Hamiltonian::qubit(p.r);

    EnergyLedger ledger{p, LedgerSource::Numeric, {}};
    ledger.q_used = q;
    auto thermal = gibbs_state(h_ref, ThermalParams(p.b));
    // Adiabats relabel the level spacing and leave populations untouched.
    auto measured = apply_unselective(first_channel(strength), thermal);
    auto extracted = apply_unselective(second_channel(q), measured);
    ledger.strokes.push_back(record(StrokeName::TP, thermal, h_ref));
    ledger.strokes.push_back(record(StrokeName::API, thermal, h_wide));
    ledger.strokes.push_back(record(StrokeName::QMI, measured, h_wide));
    ledger.strokes.push_back(record(StrokeName::QMII, extracted, h_wide));
    ledger.strokes.push_back(record(StrokeName::APII, extracted, h_ref));

    const double e_th = ledger.strokes[0].energy_after;
    const double e_api = ledger.strokes[1].energy_after;
    const double e_qmi = ledger.strokes[2].energy_after;
    const double e_qmii = ledger.strokes[3].energy_after;
    const double e_apii = ledger.strokes[4].energy_after;
    ledger.w_api = e_th - e_api;
    ledger.q_in = e_qmi - e_api;
    ledger.delta = e_qmi - e_qmii;
    ledger.w_apii = e_qmii - e_apii;
    ledger.q_out = e_th - e_apii;
    ledger.w_ext = ledger.q_in + ledger.q_out;
    finish_efficiency(ledger);
    return ledger;
}

EnergyLedger analytic_five_stroke(const CycleParams &p) {
    p.validate();
    require_mode(p, CycleMode::FiveStroke, "analytic_five_stroke");
    const auto cf = closed_form(p);
    const double strength = p.strength();
    const double r = p.r;
    const double t = cf.tanh_half;
    const double k = cf.pumped;

    EnergyLedger ledger{p, LedgerSource::Analytic, {}};
    ledger.valid = within_bounds(p);
    ledger.realizable = p.gamma >= 0.5;
    ledger.q_used = ledger.realizable ? isentropic_strength(strength, p.b)
                                      : 0.0;

    const double e_th = -0.5 * t;
    const double e_api = -0.5 * r * t;
    const double e_qmi = -0.5 * r * t + k * r;
    const double e_qmii = 0.5 * r * t - k * r;
    const double e_apii = 0.5 * t - k;

    const double ground_m = (1.0 - strength) * cf.ground;
    const double excited_m = cf.excited + strength * cf.ground;
    ledger.strokes.push_back(analytic_record(StrokeName::TP, cf.ground,
                                             cf.excited, kReferenceFrequency,
                                             e_th));
    ledger.strokes.push_back(
        analytic_record(StrokeName::API, cf.ground, cf.excited, r, e_api));
    ledger.strokes.push_back(
        analytic_record(StrokeName::QMI, ground_m, excited_m, r, e_qmi));
    ledger.strokes.push_back(
        analytic_record(StrokeName::QMII, excited_m, ground_m, r, e_qmii));
    ledger.strokes.push_back(analytic_record(
        StrokeName::APII, excited_m, ground_m, kReferenceFrequency, e_apii));

    ledger.w_api = 0.5 * (r - 1.0) * t;
    ledger.q_in = k * r;
    ledger.delta = 2.0 * k * r - r * t;
    ledger.w_apii = 0.5 * (r - 1.0) * t - k * (r - 1.0);
    ledger.q_out = k - t;
    ledger.w_ext = k * (1.0 + r) - t;
    if (ledger.q_in == 0.0) {
        ledger.eta = 0.0;
        ledger.eta_defined = false;
    } else {
        // 1 + (gamma - 1) / (r gamma), over a common denominator so that
        // gamma = 1/(1+r) lands on 0.
        ledger.eta = ((1.0 + r) * p.gamma - 1.0) / (r * p.gamma);
    }
    return ledger;
}

EnergyLedger run_numeric(const CycleParams &p) {
    return p.mode == CycleMode::ThreeStroke ? run_three_stroke_numeric(p)
                                            : run_five_stroke_numeric(p);
}

EnergyLedger run_analytic(const CycleParams &p) {
    return p.mode == CycleMode::ThreeStroke ? analytic_three_stroke(p)
                                            : analytic_five_stroke(p);
}

double first_law_residual(const EnergyLedger &ledger) {
    if (ledger.params.mode != CycleMode::FiveStroke) {
        throw InvalidCycleError("first_law_residual requires a five-stroke "
                                "ledger");
    }
    return ledger.energy_balance();
}

} // namespace qengine
