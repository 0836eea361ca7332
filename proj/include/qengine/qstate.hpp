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

#include <cstddef>
#include <span>
#include <vector>

namespace qengine {

class InvalidStateError : public Error {
  public:
    using Error::Error;
};

class InvalidParameterError : public Error {
  public:
    using Error::Error;
};

/**
 * @brief Diagonal Hamiltonian in the computational basis.
 *
 * Energies are in units of the reference level spacing (hbar * omega_0 = 1).
 * The qubit with transition frequency f (in units of omega_0) has levels
 * {-f/2, +f/2}; |0> is the ground state.
 */
class Hamiltonian {
  public:
    /// Levels must be finite and sorted ascending.
    explicit Hamiltonian(std::vector<double> levels);

    /// Two-level system with spacing `frequency` (> 0).
    static Hamiltonian qubit(double frequency);

    [[nodiscard]] std::size_t dim() const noexcept { return levels_.size(); }
    [[nodiscard]] std::span<const double> levels() const noexcept {
        return levels_;
    }
    /// Level spacing of a qubit; the top minus bottom level in general.
    [[nodiscard]] double spacing() const noexcept {
        return levels_.back() - levels_.front();
    }
    [[nodiscard]] SquareMatrix matrix() const;

  private:
    std::vector<double> levels_;
};

/// Dimensionless inverse temperature b = beta * hbar * omega_0.
class ThermalParams {
  public:
    explicit ThermalParams(double b);
    [[nodiscard]] double b() const noexcept { return b_; }

  private:
    double b_;
};

/**
 * @brief Hermitian, unit-trace, positive-semidefinite matrix.
 *
 * Construction validates all three properties against tol::kHermitian and
 * tol::kState and throws InvalidStateError otherwise.
 */
class DensityMatrix {
  public:
    explicit DensityMatrix(SquareMatrix mat);

    static DensityMatrix from_populations(std::span<const double> populations);
    static DensityMatrix from_populations(std::initializer_list<double> pops);
    static DensityMatrix maximally_mixed(std::size_t dim);
    /// |k><k| in a dim-dimensional space.
    static DensityMatrix basis_state(std::size_t dim, std::size_t k);

    [[nodiscard]] const SquareMatrix &matrix() const noexcept { return mat_; }
    [[nodiscard]] std::size_t dim() const noexcept { return mat_.dim(); }
    [[nodiscard]] std::vector<double> populations() const {
        return real_diagonal(mat_);
    }

  private:
    SquareMatrix mat_;
};

[[nodiscard]] DensityMatrix gibbs_state(const Hamiltonian &h,
                                        const ThermalParams &t);

/// Tr(H rho). Throws DimensionError or Error if the imaginary part exceeds
/// tol::kImagExpectation.
[[nodiscard]] double mean_energy(const DensityMatrix &rho, const Hamiltonian &h);

/// -sum lambda ln lambda in nats.
[[nodiscard]] double von_neumann_entropy(const DensityMatrix &rho);

/// Half the sum of |eigenvalues(a - b)|.
[[nodiscard]] double trace_distance(const DensityMatrix &a,
                                    const DensityMatrix &b);

} // namespace qengine
