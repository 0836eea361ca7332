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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qengine {

using Complex = std::complex<double>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

class NotHermitianError : public Error {
  public:
    using Error::Error;
};

namespace tol {
/// Entrywise slack for Hermiticity checks, max |a - a^dagger|.
inline constexpr double kHermitian = 1e-12;
/// Off-diagonal residual at which the Jacobi sweep stops.
inline constexpr double kEigResidual = 1e-13;
/// Slack on unit trace and on negative eigenvalues of a state.
inline constexpr double kState = 1e-12;
/// Entrywise slack on sum_n A_n^dagger A_n == I.
inline constexpr double kCompleteness = 1e-12;
/// Largest imaginary part of an expectation value that is accepted.
inline constexpr double kImagExpectation = 1e-10;
/// Probabilities below this are treated as impossible outcomes.
inline constexpr double kNegligibleProbability = 1e-15;
} // namespace tol

/**
 * @brief Dense complex square matrix, row-major.
 *
 * Sized for qubits and qutrits. Every entry is required to be finite; the
 * checked constructors reject NaN and Inf.
 */
class SquareMatrix {
  public:
    /// Zero matrix of the given dimension. dim must be positive.
    explicit SquareMatrix(std::size_t dim);

    /// Takes ownership of dim*dim row-major entries.
    SquareMatrix(std::size_t dim, std::vector<Complex> entries);

    /// Row-wise literal, e.g. {{0, 1}, {1, 0}}.
    SquareMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static SquareMatrix identity(std::size_t dim);
    static SquareMatrix diagonal(std::span<const double> values);
    static SquareMatrix diagonal(std::initializer_list<double> values);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }

    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }

    SquareMatrix &operator+=(const SquareMatrix &other);
    SquareMatrix &operator-=(const SquareMatrix &other);
    SquareMatrix &operator*=(Complex scalar);

    friend bool operator==(const SquareMatrix &, const SquareMatrix &) = default;

  private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

[[nodiscard]] SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b);
[[nodiscard]] SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b);
[[nodiscard]] SquareMatrix operator*(Complex scalar, SquareMatrix a);

[[nodiscard]] SquareMatrix matmul(const SquareMatrix &a, const SquareMatrix &b);
[[nodiscard]] SquareMatrix adjoint(const SquareMatrix &a);
[[nodiscard]] Complex trace(const SquareMatrix &a);

/// a * b * a^dagger, the shape of every Kraus and similarity update.
[[nodiscard]] SquareMatrix sandwich(const SquareMatrix &a,
                                    const SquareMatrix &b);

/// Largest entrywise modulus of a - b. Dimensions must agree.
[[nodiscard]] double max_abs_diff(const SquareMatrix &a, const SquareMatrix &b);

/// Largest entrywise modulus of a - a^dagger.
[[nodiscard]] double hermiticity_defect(const SquareMatrix &a);

/// Largest modulus among off-diagonal entries.
[[nodiscard]] double max_off_diagonal(const SquareMatrix &a);

/// Real parts of the diagonal, in basis order.
[[nodiscard]] std::vector<double> real_diagonal(const SquareMatrix &a);

/**
 * @brief Eigenvalues of a Hermitian matrix in ascending order.
 *
 * dim 2 uses the closed form from trace and determinant. Larger matrices
 * are embedded as the real symmetric matrix [[Re, -Im], [Im, Re]], whose
 * spectrum is the original one with every eigenvalue doubled, and
 * diagonalized with cyclic Jacobi sweeps.
 *
 * Throws NotHermitianError if hermiticity_defect(a) > tol::kHermitian.
 */
[[nodiscard]] std::vector<double> eig_hermitian(const SquareMatrix &a);

[[nodiscard]] std::string to_string(const SquareMatrix &a);

} // namespace qengine
