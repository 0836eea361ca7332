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

#include "qengine/qlinalg.hpp"
#include "qengine/qstate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qengine {

class IncompleteKrausError : public Error {
  public:
    using Error::Error;
};

/// Raised when the isentropic second stroke has no strength in [0, 1].
class NoIsentropicPartnerError : public Error {
  public:
    NoIsentropicPartnerError(double strength, double threshold);
    [[nodiscard]] double threshold() const noexcept { return threshold_; }

  private:
    double threshold_;
};

/**
 * @brief Ordered measurement operators {A_n} sharing one dimension.
 *
 * Completeness (sum A_n^dagger A_n == I) is not enforced at construction so
 * that validate_completeness can report on arbitrary candidate sets; the
 * channel application functions refuse incomplete sets.
 */
class KrausSet {
  public:
    KrausSet(std::vector<SquareMatrix> ops, std::string label = {});

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
    [[nodiscard]] const std::vector<SquareMatrix> &ops() const noexcept {
        return ops_;
    }
    [[nodiscard]] const SquareMatrix &operator[](std::size_t n) const {
        return ops_.at(n);
    }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }

  private:
    std::size_t dim_;
    std::vector<SquareMatrix> ops_;
    std::string label_;
};

struct CompletenessReport {
    bool passed;
    /// max entrywise |sum A^dagger A - I|
    double deviation;
};

/// Outcome n of a selective measurement. post_state is empty when the
/// outcome probability is below tol::kNegligibleProbability.
struct MeasurementOutcome {
    double probability;
    std::optional<DensityMatrix> post_state;

    [[nodiscard]] bool negligible() const noexcept {
        return !post_state.has_value();
    }
};

[[nodiscard]] CompletenessReport validate_completeness(const KrausSet &k);

[[nodiscard]] std::vector<SquareMatrix> povm_elements(const KrausSet &k);

/// rho -> sum_n A_n rho A_n^dagger.
[[nodiscard]] DensityMatrix apply_unselective(const KrausSet &k,
                                              const DensityMatrix &rho);

/// Probabilities Tr(A_n^dagger A_n rho) and normalized post-states, in Kraus
/// order.
[[nodiscard]] std::vector<MeasurementOutcome>
measure_selective(const KrausSet &k, const DensityMatrix &rho);

/// Energy-pumping measurement of strength P:
/// M1 = sqrt(1-P)|0><0| + |1><1|, M2 = sqrt(P)|1><0|.
[[nodiscard]] KrausSet first_channel(double strength);

/// Energy-extracting measurement of strength q:
/// N1 = |0><0| + sqrt(1-q)|1><1|, N2 = sqrt(q)|0><1|.
[[nodiscard]] KrausSet second_channel(double strength);

/// Smallest first-channel strength, (1 - e^-b)/2, for which an isentropic
/// second-channel partner exists.
[[nodiscard]] double isentropic_threshold(double b);

/**
 * @brief Strength q of the second channel that exactly swaps the qubit
 * populations produced by first_channel(P) acting on the Gibbs state at b.
 *
 * q = (2P e^{b/2} - 2 sinh(b/2)) / (e^{-b/2} + P e^{b/2}), evaluated as
 * (2P - (1 - e^-b)) / (e^-b + P) after dividing through by e^{b/2}.
 * Throws NoIsentropicPartnerError when P < isentropic_threshold(b).
 */
[[nodiscard]] double isentropic_strength(double strength, double b);

} // namespace qengine
