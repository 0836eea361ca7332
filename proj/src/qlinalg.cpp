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

#include "qengine/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qengine {

namespace {

void require_same_dim(const SquareMatrix &a, const SquareMatrix &b,
                      const char *what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" +
                             std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()) + ")");
    }
}

void require_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error("matrix entry is not finite");
        }
    }
}

// Real symmetric Jacobi on an n x n row-major buffer. Returns the diagonal.
std::vector<double> jacobi_symmetric(std::vector<double> m, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> double & {
        return m[r * n + c];
    };
    double scale = 0.0;
    for (double v : m) {
        scale += v * v;
    }
    const double target = tol::kEigResidual * std::max(1.0, std::sqrt(scale));

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += 2.0 * at(p, q) * at(p, q);
            }
        }
        if (std::sqrt(off) <= target) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                // Rutishauser's stable rotation.
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::hypot(t, 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = at(i, i);
    }
    return diag;
}

} // namespace

SquareMatrix::SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw DimensionError("matrix dimension must be positive");
    }
}

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim == 0) {
        throw DimensionError("matrix dimension must be positive");
    }
    if (data_.size() != dim * dim) {
        throw DimensionError("expected " + std::to_string(dim * dim) +
                             " entries, got " + std::to_string(data_.size()));
    }
    require_finite(data_);
}

SquareMatrix::SquareMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    if (dim_ == 0) {
        throw DimensionError("matrix dimension must be positive");
    }
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionError("matrix literal is not square");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

SquareMatrix SquareMatrix::diagonal(std::span<const double> values) {
    SquareMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    require_finite(m.entries());
    return m;
}

SquareMatrix SquareMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

SquareMatrix &SquareMatrix::operator+=(const SquareMatrix &other) {
    require_same_dim(*this, other, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

SquareMatrix &SquareMatrix::operator-=(const SquareMatrix &other) {
    require_same_dim(*this, other, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

SquareMatrix &SquareMatrix::operator*=(Complex scalar) {
    for (auto &z : data_) {
        z *= scalar;
    }
    return *this;
}

SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b) {
    a += b;
    return a;
}

SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b) {
    a -= b;
    return a;
}

SquareMatrix operator*(Complex scalar, SquareMatrix a) {
    a *= scalar;
    return a;
}

SquareMatrix matmul(const SquareMatrix &a, const SquareMatrix &b) {
    require_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    SquareMatrix out(n);
    if (n == 2) {
        out(0, 0) = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0);
        out(0, 1) = a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1);
        out(1, 0) = a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0);
        out(1, 1) = a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

SquareMatrix adjoint(const SquareMatrix &a) {
    const std::size_t n = a.dim();
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

Complex trace(const SquareMatrix &a) {
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

SquareMatrix sandwich(const SquareMatrix &a, const SquareMatrix &b) {
    return matmul(matmul(a, b), adjoint(a));
}

double max_abs_diff(const SquareMatrix &a, const SquareMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    const auto lhs = a.entries();
    const auto rhs = b.entries();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    }
    return worst;
}

double hermiticity_defect(const SquareMatrix &a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

double max_off_diagonal(const SquareMatrix &a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) {
                worst = std::max(worst, std::abs(a(i, j)));
            }
        }
    }
    return worst;
}

std::vector<double> real_diagonal(const SquareMatrix &a) {
    std::vector<double> diag(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        diag[i] = a(i, i).real();
    }
    return diag;
}

std::vector<double> eig_hermitian(const SquareMatrix &a) {
    const double defect = hermiticity_defect(a);
    if (defect > tol::kHermitian) {
        std::ostringstream msg;
        msg << "eig_hermitian: matrix is not Hermitian (defect " << defect
            << ")";
        throw NotHermitianError(msg.str());
    }
    const std::size_t n = a.dim();
    if (n == 1) {
        return {a(0, 0).real()};
    }
    if (n == 2) {
        const double p = a(0, 0).real();
        const double d = a(1, 1).real();
        const double mean = 0.5 * (p + d);
        const double radius = std::hypot(0.5 * (p - d), std::abs(a(0, 1)));
        return {mean - radius, mean + radius};
    }

    const std::size_t m = 2 * n;
    std::vector<double> embed(m * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Symmetrize so the real embedding is exactly symmetric.
            const Complex z = 0.5 * (a(i, j) + std::conj(a(j, i)));
            embed[i * m + j] = z.real();
            embed[(i + n) * m + (j + n)] = z.real();
            embed[(i + n) * m + j] = z.imag();
            embed[i * m + (j + n)] = -z.imag();
        }
    }
    auto doubled = jacobi_symmetric(std::move(embed), m);
    std::sort(doubled.begin(), doubled.end());
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return values;
}

std::string to_string(const SquareMatrix &a) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out << (i == 0 ? "[" : ", [");
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (j != 0) {
                out << ", ";
            }
            out << a(i, j);
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

} // namespace qengine
