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
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace qengine;
using Catch::Matchers::WithinAbs;
using testing::kLn2;

namespace {

KrausSet projective_z() {
    return KrausSet({SquareMatrix::diagonal({1.0, 0.0}),
                     SquareMatrix::diagonal({0.0, 1.0})},
                    "projective_z");
}

DensityMatrix thermal(double b) {
    return gibbs_state(Hamiltonian::qubit(1.0), ThermalParams(b));
}

} // namespace

TEST_CASE("KrausSet construction", "[channels]") {
    REQUIRE_THROWS_AS(KrausSet({}), Error);
    REQUIRE_THROWS_AS(KrausSet({SquareMatrix::identity(2),
                                SquareMatrix::identity(3)}),
                      DimensionError);
    const auto k = first_channel(0.2);
    CHECK(k.size() == 2);
    CHECK(k.dim() == 2);
    CHECK(k.label() == "first_channel");
}

TEST_CASE("validate_completeness", "[channels]") {
    const auto projective = validate_completeness(projective_z());
    CHECK(projective.passed);
    CHECK(projective.deviation == 0.0);

    const auto half = validate_completeness(
        KrausSet({(1.0 / std::sqrt(2.0)) * SquareMatrix::identity(2)}));
    CHECK_FALSE(half.passed);
    CHECK_THAT(half.deviation, WithinAbs(0.5, 1e-15));

    const auto first = validate_completeness(first_channel(0.3));
    CHECK(first.passed);
    CHECK(first.deviation <= 1e-15);
}

TEST_CASE("povm_elements", "[channels]") {
    const double p = 0.3;
    const auto first = povm_elements(first_channel(p));
    CHECK(max_abs_diff(first[0], SquareMatrix::diagonal({1.0 - p, 1.0})) <=
          1e-15);
    CHECK(max_abs_diff(first[1], SquareMatrix::diagonal({p, 0.0})) <= 1e-15);

    const auto proj = povm_elements(projective_z());
    CHECK(proj[0] == projective_z()[0]);
    CHECK(proj[1] == projective_z()[1]);

    const double q = 2.0 / 7.0;
    const auto second = povm_elements(second_channel(q));
    CHECK(max_abs_diff(second[0], SquareMatrix::diagonal({1.0, 1.0 - q})) <=
          1e-15);
    CHECK(max_abs_diff(second[1], SquareMatrix::diagonal({0.0, q})) <= 1e-15);
}

TEST_CASE("channel constructors", "[channels]") {
    SECTION("P = 3/8") {
        const auto k = first_channel(3.0 / 8.0);
        CHECK_THAT(k[0](0, 0).real(), WithinAbs(std::sqrt(5.0 / 8.0), 1e-15));
        CHECK(k[0](1, 1) == Complex(1.0, 0.0));
        CHECK_THAT(k[1](1, 0).real(), WithinAbs(std::sqrt(3.0 / 8.0), 1e-15));
        CHECK(max_off_diagonal(k[0]) == 0.0);
        CHECK(k[1](0, 1) == Complex(0.0, 0.0));
    }
    SECTION("q = 2/7") {
        const auto k = second_channel(2.0 / 7.0);
        CHECK(k[0](0, 0) == Complex(1.0, 0.0));
        CHECK_THAT(k[0](1, 1).real(), WithinAbs(std::sqrt(5.0 / 7.0), 1e-15));
        CHECK_THAT(k[1](0, 1).real(), WithinAbs(std::sqrt(2.0 / 7.0), 1e-15));
    }
    SECTION("strength range") {
        REQUIRE_THROWS_AS(first_channel(-0.01), InvalidParameterError);
        REQUIRE_THROWS_AS(first_channel(1.01), InvalidParameterError);
        REQUIRE_THROWS_AS(second_channel(NAN), InvalidParameterError);
        REQUIRE_THROWS_AS(second_channel(2.0), InvalidParameterError);
    }
}

TEST_CASE("apply_unselective", "[channels]") {
    std::mt19937_64 rng(31);
    const auto rho = testing::random_state(rng, 2);

    SECTION("identity set") {
        const auto out =
            apply_unselective(KrausSet({SquareMatrix::identity(2)}), rho);
        CHECK(max_abs_diff(out.matrix(), rho.matrix()) == 0.0);
    }
    SECTION("zero strength channels are the identity") {
        CHECK(max_abs_diff(apply_unselective(first_channel(0.0), rho).matrix(),
                           rho.matrix()) <= 1e-15);
        CHECK(max_abs_diff(apply_unselective(second_channel(0.0), rho).matrix(),
                           rho.matrix()) <= 1e-15);
    }
    SECTION("P = 1 pumps everything into |1>") {
        const auto out = apply_unselective(first_channel(1.0), rho);
        CHECK(max_abs_diff(out.matrix(),
                           DensityMatrix::basis_state(2, 1).matrix()) <= 1e-15);
    }
    SECTION("q = 1 moves everything into |0>") {
        const auto out = apply_unselective(second_channel(1.0), rho);
        CHECK(max_abs_diff(out.matrix(),
                           DensityMatrix::basis_state(2, 0).matrix()) <= 1e-15);
    }
    SECTION("P = 3/8 on the b = ln 2 Gibbs state") {
        const auto pops =
            apply_unselective(first_channel(3.0 / 8.0), thermal(kLn2))
                .populations();
        const auto exact = testing::pump(
            {testing::Rational(2, 3), testing::Rational(1, 3)},
            testing::Rational(3, 8));
        REQUIRE(exact.ground == testing::Rational(5, 12));
        REQUIRE(exact.excited == testing::Rational(7, 12));
        CHECK_THAT(pops[0], WithinAbs(exact.ground.value(), 1e-15));
        CHECK_THAT(pops[1], WithinAbs(exact.excited.value(), 1e-15));
    }
    SECTION("incomplete set is refused") {
        const KrausSet half({0.5 * SquareMatrix::identity(2)});
        REQUIRE_THROWS_AS(apply_unselective(half, rho), IncompleteKrausError);
    }
    SECTION("dimension mismatch") {
        REQUIRE_THROWS_AS(
            apply_unselective(first_channel(0.5),
                              DensityMatrix::maximally_mixed(3)),
            DimensionError);
    }
}

TEST_CASE("measure_selective", "[channels]") {
    SECTION("Born rule on a diagonal state") {
        const auto outcomes = measure_selective(
            projective_z(),
            DensityMatrix::from_populations({2.0 / 3.0, 1.0 / 3.0}));
        REQUIRE(outcomes.size() == 2);
        CHECK_THAT(outcomes[0].probability, WithinAbs(2.0 / 3.0, 1e-15));
        CHECK_THAT(outcomes[1].probability, WithinAbs(1.0 / 3.0, 1e-15));
        CHECK(max_abs_diff(outcomes[0].post_state->matrix(),
                           DensityMatrix::basis_state(2, 0).matrix()) <= 1e-15);
        CHECK(max_abs_diff(outcomes[1].post_state->matrix(),
                           DensityMatrix::basis_state(2, 1).matrix()) <= 1e-15);
    }
    SECTION("first channel at P = 3/8 on gibbs(ln 2)") {
        const auto outcomes =
            measure_selective(first_channel(3.0 / 8.0), thermal(kLn2));
        CHECK_THAT(outcomes[1].probability, WithinAbs(0.25, 1e-15));
        CHECK(max_abs_diff(outcomes[1].post_state->matrix(),
                           DensityMatrix::basis_state(2, 1).matrix()) <= 1e-15);
        CHECK_THAT(outcomes[0].probability + outcomes[1].probability,
                   WithinAbs(1.0, 1e-15));
    }
    SECTION("impossible outcome is flagged, not normalized") {
        const auto outcomes = measure_selective(
            first_channel(0.5), DensityMatrix::basis_state(2, 1));
        REQUIRE(outcomes[1].negligible());
        CHECK(outcomes[1].probability == 0.0);
        CHECK_FALSE(outcomes[0].negligible());
        CHECK_THAT(outcomes[0].probability, WithinAbs(1.0, 1e-15));
    }
    SECTION("incomplete set is refused") {
        REQUIRE_THROWS_AS(
            measure_selective(KrausSet({0.5 * SquareMatrix::identity(2)}),
                              DensityMatrix::maximally_mixed(2)),
            IncompleteKrausError);
    }
}

TEST_CASE("random Kraus sets are sound", "[channels][property]") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        const std::size_t n_ops = 1 + trial % 4;
        const auto k = testing::random_kraus_set(rng, dim, n_ops);
        const auto report = validate_completeness(k);
        REQUIRE(report.passed);

        const auto rho = testing::random_state(rng, dim);
        const auto out = apply_unselective(k, rho);
        REQUIRE(std::abs(trace(out.matrix()).real() - 1.0) <= 1e-13);
        REQUIRE(eig_hermitian(out.matrix()).front() >= -1e-12);

        SquareMatrix mixture(dim);
        double total = 0.0;
        for (const auto &o : measure_selective(k, rho)) {
            total += o.probability;
            if (!o.negligible()) {
                mixture += o.probability * o.post_state->matrix();
            }
        }
        REQUIRE(std::abs(total - 1.0) <= 1e-12);
        REQUIRE(max_abs_diff(mixture, out.matrix()) <= 1e-13);
    }
}

TEST_CASE("isentropic_strength", "[channels]") {
    SECTION("threshold gives q = 0") {
        for (double b : {0.1, kLn2, 1.0, 5.0}) {
            CHECK(isentropic_strength(isentropic_threshold(b), b) == 0.0);
        }
    }
    SECTION("P = 3/8 at b = ln 2 gives q = 2/7") {
        const auto exact = testing::exact_cycle_ln2(testing::Rational(3, 4),
                                                    testing::Rational(1));
        REQUIRE(exact.q == testing::Rational(2, 7));
        CHECK_THAT(isentropic_strength(3.0 / 8.0, kLn2),
                   WithinAbs(2.0 / 7.0, 1e-15));
    }
    SECTION("P = 1 gives q = 1") {
        for (double b : {0.01, 0.1, 1.0, 5.0, 40.0}) {
            CHECK_THAT(isentropic_strength(1.0, b), WithinAbs(1.0, 1e-15));
        }
    }
    SECTION("matches the sinh form of the constraint") {
        for (double b : {0.1, kLn2, 1.0, 5.0}) {
            for (double gamma : {0.55, 0.7, 0.85, 1.0}) {
                const double p = gamma * (1.0 - std::exp(-b));
                const double direct =
                    (2 * p * std::exp(b / 2) - 2 * std::sinh(b / 2)) /
                    (std::exp(-b / 2) + p * std::exp(b / 2));
                CHECK_THAT(isentropic_strength(p, b), WithinAbs(direct, 1e-14));
            }
        }
    }
    SECTION("below threshold is an error carrying the threshold") {
        const double b = 1.0;
        try {
            (void)isentropic_strength(0.1, b);
            FAIL("expected NoIsentropicPartnerError");
        } catch (const NoIsentropicPartnerError &e) {
            CHECK_THAT(e.threshold(),
                       WithinAbs((1.0 - std::exp(-b)) / 2.0, 1e-15));
        }
    }
}

TEST_CASE("second stroke swaps populations isentropically",
          "[channels][property]") {
    for (double b : {0.1, kLn2, 1.0, 5.0}) {
        const auto rho_th = thermal(b);
        const double lo = isentropic_threshold(b);
        const double hi = 2.0 * lo;
        for (int i = 0; i <= 20; ++i) {
            const double p = lo + (hi - lo) * i / 20.0;
            const auto rho_m = apply_unselective(first_channel(p), rho_th);
            const auto rho_n = apply_unselective(
                second_channel(isentropic_strength(p, b)), rho_m);
            const auto pm = rho_m.populations();
            const auto pn = rho_n.populations();
            REQUIRE(std::abs(pn[0] - pm[1]) <= 1e-12);
            REQUIRE(std::abs(pn[1] - pm[0]) <= 1e-12);
            REQUIRE(std::abs(von_neumann_entropy(rho_m) -
                             von_neumann_entropy(rho_n)) <= 1e-12);
            REQUIRE(max_off_diagonal(rho_m.matrix()) <= 1e-14);
            REQUIRE(max_off_diagonal(rho_n.matrix()) <= 1e-14);

            const double s_th = von_neumann_entropy(rho_th);
            const double s_m = von_neumann_entropy(rho_m);
            if (i > 0 && i < 20) {
                REQUIRE(s_m > s_th);
            }
            if (i == 20) {
                REQUIRE(std::abs(s_m - s_th) <= 1e-12);
            }
        }
    }
}
