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

#include "qengine/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qengine {

Hamiltonian::Hamiltonian(std::vector<double> levels)
    : levels_(std::move(levels)) {
    if (levels_.empty()) {
        throw DimensionError("Hamiltonian needs at least one level");
    }
    for (double e : levels_) {
        if (!std::isfinite(e)) {
            throw InvalidParameterError("Hamiltonian level is not finite");
        }
    }
    if (!std::is_sorted(levels_.begin(), levels_.end())) {
        throw InvalidParameterError("Hamiltonian levels must be ascending");
    }
}

Hamiltonian Hamiltonian::qubit(double frequency) {
    if (!(frequency > 0.0) || !std::isfinite(frequency)) {
        throw InvalidParameterError("qubit frequency must be positive");
    }
    return Hamiltonian({-0.5 * frequency, 0.5 * frequency});
}

SquareMatrix Hamiltonian::matrix() const {
    return SquareMatrix::diagonal(levels_);
}

ThermalParams::ThermalParams(double b) : b_(b) {
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw InvalidParameterError("inverse temperature b must be finite "
                                    "and > 0");
    }
}

DensityMatrix::DensityMatrix(SquareMatrix mat) : mat_(std::move(mat)) {
    const double defect = hermiticity_defect(mat_);
    if (defect > tol::kHermitian) {
        std::ostringstream msg;
        msg << "density matrix is not Hermitian (defect " << defect << ")";
        throw InvalidStateError(msg.str());
    }
    const Complex tr = trace(mat_);
    if (std::abs(tr - 1.0) > tol::kState) {
        std::ostringstream msg;
        msg << "density matrix trace is " << tr << ", expected 1";
        throw InvalidStateError(msg.str());
    }
    const auto spectrum = eig_hermitian(mat_);
    if (spectrum.front() < -tol::kState) {
        std::ostringstream msg;
        msg << "density matrix has negative eigenvalue " << spectrum.front();
        throw InvalidStateError(msg.str());
    }
}

DensityMatrix
DensityMatrix::from_populations(std::span<const double> populations) {
    return DensityMatrix(SquareMatrix::diagonal(populations));
}

DensityMatrix
DensityMatrix::from_populations(std::initializer_list<double> pops) {
    return from_populations(std::span<const double>(pops.begin(), pops.size()));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    if (dim == 0) {
        throw DimensionError("state dimension must be positive");
    }
    return from_populations(
        std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw DimensionError("basis index out of range");
    }
    std::vector<double> pops(dim, 0.0);
    pops[k] = 1.0;
    return from_populations(pops);
}

DensityMatrix gibbs_state(const Hamiltonian &h, const ThermalParams &t) {
    // Shift by the ground energy so the largest weight is exactly 1.
    const double ground = h.levels().front();
    std::vector<double> weights(h.dim());
    double partition = 0.0;
    for (std::size_t k = 0; k < h.dim(); ++k) {
        weights[k] = std::exp(-t.b() * (h.levels()[k] - ground));
        partition += weights[k];
    }
    for (double &w : weights) {
        w /= partition;
    }
    return DensityMatrix::from_populations(weights);
}

double mean_energy(const DensityMatrix &rho, const Hamiltonian &h) {
    if (rho.dim() != h.dim()) {
        throw DimensionError("mean_energy: state and Hamiltonian dimensions "
                             "differ");
    }
    // H is diagonal, so Tr(H rho) only sees the diagonal of rho.
    Complex sum{0.0, 0.0};
    for (std::size_t k = 0; k < h.dim(); ++k) {
        sum += h.levels()[k] * rho.matrix()(k, k);
    }
    if (std::abs(sum.imag()) > tol::kImagExpectation) {
        throw Error("mean_energy: expectation has imaginary part " +
                    std::to_string(sum.imag()));
    }
    return sum.real();
}

double von_neumann_entropy(const DensityMatrix &rho) {
    double entropy = 0.0;
    for (double lambda : eig_hermitian(rho.matrix())) {
        lambda = std::max(lambda, 0.0);
        if (lambda < tol::kNegligibleProbability) {
            continue;
        }
        entropy -= lambda * std::log(lambda);
    }
    return entropy;
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("trace_distance: dimension mismatch");
    }
    double sum = 0.0;
    for (double lambda : eig_hermitian(a.matrix() - b.matrix())) {
        sum += std::abs(lambda);
    }
    return 0.5 * sum;
}

} // namespace qengine
