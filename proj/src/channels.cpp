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

#include "qengine/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qengine {

namespace {

void require_strength(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream msg;
        msg << name << " strength must lie in [0, 1], got " << value;
        throw InvalidParameterError(msg.str());
    }
}

void require_complete(const KrausSet &k, const DensityMatrix &rho) {
    if (k.dim() != rho.dim()) {
        throw DimensionError("Kraus set and state dimensions differ");
    }
    const auto report = validate_completeness(k);
    if (!report.passed) {
        std::ostringstream msg;
        msg << "Kraus set '" << k.label()
            << "' is incomplete (deviation " << report.deviation << ")";
        throw IncompleteKrausError(msg.str());
    }
}

std::string describe_partner_failure(double strength, double threshold) {
    std::ostringstream msg;
    msg << "no isentropic partner strength: P = " << strength
        << " is below the threshold (1 - e^-b)/2 = " << threshold;
    return msg.str();
}

} // namespace

NoIsentropicPartnerError::NoIsentropicPartnerError(double strength,
                                                   double threshold)
    : Error(describe_partner_failure(strength, threshold)),
      threshold_(threshold) {}

KrausSet::KrausSet(std::vector<SquareMatrix> ops, std::string label)
    : dim_(0), ops_(std::move(ops)), label_(std::move(label)) {
    if (ops_.empty()) {
        throw Error("Kraus set needs at least one operator");
    }
    dim_ = ops_.front().dim();
    for (const auto &op : ops_) {
        if (op.dim() != dim_) {
            throw DimensionError("Kraus operators must share one dimension");
        }
    }
}

CompletenessReport validate_completeness(const KrausSet &k) {
    SquareMatrix sum(k.dim());
    for (const auto &e : povm_elements(k)) {
        sum += e;
    }
    const double deviation =
        max_abs_diff(sum, SquareMatrix::identity(k.dim()));
    return {deviation <= tol::kCompleteness, deviation};
}

std::vector<SquareMatrix> povm_elements(const KrausSet &k) {
    std::vector<SquareMatrix> elements;
    elements.reserve(k.size());
    for (const auto &op : k.ops()) {
        elements.push_back(matmul(adjoint(op), op));
    }
    return elements;
}

DensityMatrix apply_unselective(const KrausSet &k, const DensityMatrix &rho) {
    require_complete(k, rho);
    SquareMatrix out(k.dim());
    for (const auto &op : k.ops()) {
        out += sandwich(op, rho.matrix());
    }
    return DensityMatrix(std::move(out));
}

std::vector<MeasurementOutcome> measure_selective(const KrausSet &k,
                                                  const DensityMatrix &rho) {
    require_complete(k, rho);
    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(k.size());
    for (const auto &op : k.ops()) {
        SquareMatrix branch = sandwich(op, rho.matrix());
        const double p = std::max(trace(branch).real(), 0.0);
        if (p < tol::kNegligibleProbability) {
            outcomes.push_back({p, std::nullopt});
            continue;
        }
        branch *= 1.0 / p;
        outcomes.push_back({p, DensityMatrix(std::move(branch))});
    }
    return outcomes;
}

KrausSet first_channel(double strength) {
    require_strength(strength, "first channel");
    const SquareMatrix m1{{std::sqrt(1.0 - strength), 0.0}, {0.0, 1.0}};
    const SquareMatrix m2{{0.0, 0.0}, {std::sqrt(strength), 0.0}};
    return KrausSet({m1, m2}, "first_channel");
}

KrausSet second_channel(double strength) {
    require_strength(strength, "second channel");
    const SquareMatrix n1{{1.0, 0.0}, {0.0, std::sqrt(1.0 - strength)}};
    const SquareMatrix n2{{0.0, std::sqrt(strength)}, {0.0, 0.0}};
    return KrausSet({n1, n2}, "second_channel");
}

double isentropic_threshold(double b) {
    const ThermalParams t(b);
    return -0.5 * std::expm1(-t.b());
}

double isentropic_strength(double strength, double b) {
    require_strength(strength, "first channel");
    const double threshold = isentropic_threshold(b);
    const double excess = 2.0 * strength + std::expm1(-b);
    if (excess < 0.0) {
        throw NoIsentropicPartnerError(strength, threshold);
    }
    const double q = excess / (std::exp(-b) + strength);
    // Exact value lies in [0, 1]; only rounding can push it past 1.
    return std::min(q, 1.0);
}

} // namespace qengine
