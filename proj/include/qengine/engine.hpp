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

#include "qengine/channels.hpp"
#include "qengine/qstate.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qengine {

enum class CycleMode { ThreeStroke, FiveStroke };

/// TP thermalization, API/APII adiabats out and back, QMI/QMII measurements.
enum class StrokeName { TP, API, QMI, QMII, APII };

enum class LedgerSource { Numeric, Analytic };

[[nodiscard]] std::string_view to_string(CycleMode mode) noexcept;
[[nodiscard]] std::string_view to_string(StrokeName name) noexcept;
[[nodiscard]] std::string_view to_string(LedgerSource source) noexcept;

/// Cycle parameters violate a bound on gamma or r.
class InvalidCycleError : public Error {
  public:
    using Error::Error;
};

/// The isentropic second measurement does not exist for the requested
/// strength (gamma < 1/2), even though the gamma bound may allow it.
class UnrealizableChannelError : public InvalidCycleError {
  public:
    using InvalidCycleError::InvalidCycleError;
};

/**
 * @brief Parameters of one engine cycle.
 *
 * b is beta * hbar * omega_0, gamma the normalized first-stroke strength
 * with P = gamma * (1 - e^-b), and r = omega / omega_0 the level-spacing
 * ratio reached by the outgoing adiabat.
 */
struct CycleParams {
    double b;
    double gamma;
    double r = 1.0;
    CycleMode mode = CycleMode::ThreeStroke;

    /// Checks b > 0, gamma in [0, 1], r >= 1, and r == 1 for ThreeStroke.
    /// Throws InvalidParameterError.
    void validate() const;

    /// First-channel strength P.
    [[nodiscard]] double strength() const;
};

/// (gamma_min, gamma_max) of the engine-valid range. Throws
/// InvalidParameterError for r < 1.
[[nodiscard]] std::pair<double, double> gamma_bounds(CycleMode mode, double r);

struct StrokeRecord {
    StrokeName name;
    DensityMatrix state_after;
    Hamiltonian hamiltonian_after;
    double energy_after;
    double entropy_after;
};

/**
 * @brief Energy bookkeeping for one cycle, in units of hbar * omega_0.
 *
 * Sign conventions follow the closed-form definitions: q_in = E^QMI - E^API,
 * q_out = E^th - E^APII, w_api = E^th - E^API, w_apii = E^QMII - E^APII,
 * delta = E^QMI - E^QMII, w_ext = q_in + q_out, eta = w_ext / q_in. For the
 * three-stroke cycle the adiabats are absent and w_api = w_apii = 0.
 */
struct EnergyLedger {
    CycleParams params;
    LedgerSource source;
    std::vector<StrokeRecord> strokes;
    double q_in = 0.0;
    double q_out = 0.0;
    double w_api = 0.0;
    double w_apii = 0.0;
    double delta = 0.0;
    double w_ext = 0.0;
    double eta = 0.0;
    /// Second-channel strength; 0 with realizable == false when no
    /// isentropic partner exists.
    double q_used = 0.0;
    /// gamma lies inside gamma_bounds(mode, r).
    bool valid = true;
    /// The second measurement channel exists (gamma >= 1/2).
    bool realizable = true;
    /// eta was computed; false when q_in == 0 and eta is reported as 0.
    bool eta_defined = true;

    /// First stroke with the given name. Throws Error if absent.
    [[nodiscard]] const StrokeRecord &stroke(StrokeName name) const;

    /// q_out + q_in - w_api - delta - w_apii for either mode.
    [[nodiscard]] double energy_balance() const noexcept;
};

[[nodiscard]] EnergyLedger run_three_stroke_numeric(const CycleParams &p);
[[nodiscard]] EnergyLedger analytic_three_stroke(const CycleParams &p);
[[nodiscard]] EnergyLedger run_five_stroke_numeric(const CycleParams &p);
[[nodiscard]] EnergyLedger analytic_five_stroke(const CycleParams &p);

/// Numeric or analytic run selected by p.mode.
[[nodiscard]] EnergyLedger run_numeric(const CycleParams &p);
[[nodiscard]] EnergyLedger run_analytic(const CycleParams &p);

/// Signed first-law residual of a five-stroke ledger. Throws
/// InvalidCycleError for three-stroke ledgers.
[[nodiscard]] double first_law_residual(const EnergyLedger &ledger);

} // namespace qengine
