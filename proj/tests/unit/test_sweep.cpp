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

#include "qengine/sweep.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

using namespace qengine;
using Catch::Matchers::WithinAbs;
using testing::kLn2;

namespace {

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        fields.emplace_back();
    }
    return fields;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_CASE("format_real", "[sweep]") {
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(2.0 / 3.0) == "0.666666666667");
    CHECK(format_real(-1.0 / 12.0) == "-0.0833333333333");
    CHECK(format_real(1e-17) == "1e-17");
}

TEST_CASE("three-stroke sweep gives the efficiency column", "[sweep]") {
    SweepSpec spec;
    spec.b_values = {kLn2};
    spec.gamma_values = {0.5, 0.75, 1.0};
    const auto lines = lines_of(sweep_csv(spec));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == kSweepHeader);

    const auto header = split(lines[0], ',');
    REQUIRE(header.size() == 18);
    const double expected[] = {0.0, 2.0 / 3.0, 1.0};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto fields = split(lines[i + 1], ',');
        REQUIRE(fields.size() == header.size());
        CHECK(fields[0] == "three");
        CHECK_THAT(std::stod(fields[12]), WithinAbs(expected[i], 1e-11));
        CHECK_THAT(std::stod(fields[13]), WithinAbs(expected[i], 1e-10));
        CHECK(fields[17] == "1");
    }
}

TEST_CASE("five-stroke sweep at r = 1 matches the three-stroke rows",
          "[sweep]") {
    SweepSpec three;
    three.b_values = {0.1, 1.0};
    three.gamma_values = {0.5, 0.8, 1.0};
    SweepSpec five = three;
    five.mode = CycleMode::FiveStroke;
    const auto a = lines_of(sweep_csv(three));
    const auto b = lines_of(sweep_csv(five));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
        const auto fa = split(a[i], ',');
        const auto fb = split(b[i], ',');
        for (std::size_t c = 1; c < fa.size(); ++c) {
            if (fa[c].empty() || fb[c].empty()) {
                CHECK(fa[c] == fb[c]);
                continue;
            }
            CHECK_THAT(std::stod(fa[c]), WithinAbs(std::stod(fb[c]), 1e-11));
        }
    }
}

TEST_CASE("sweep grid order and validity column", "[sweep]") {
    SweepSpec spec;
    spec.mode = CycleMode::FiveStroke;
    spec.b_values = {0.5, 2.0};
    spec.gamma_values = {0.1, 0.4, 0.9};
    spec.r_values = {1.0, 3.0};
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 12);
    std::size_t i = 0;
    for (double b : spec.b_values) {
        for (double gamma : spec.gamma_values) {
            for (double r : spec.r_values) {
                const auto &row = rows[i++];
                CHECK(row.params.b == b);
                CHECK(row.params.gamma == gamma);
                CHECK(row.params.r == r);
                const auto [lo, hi] = gamma_bounds(CycleMode::FiveStroke, r);
                CHECK(row.valid == (gamma >= lo && gamma <= hi));
                // Numeric columns exist only where the second channel does.
                CHECK(row.eta_numeric.has_value() ==
                      (row.valid && gamma >= 0.5));
                CHECK(row.q.has_value() == row.eta_numeric.has_value());
            }
        }
    }
    // gamma = 0.4, r = 3 is inside the improved bound but formula-only.
    const auto &window = rows[3];
    CHECK(window.params.gamma == 0.4);
    CHECK(window.params.r == 3.0);
    CHECK(window.valid);
    CHECK_FALSE(window.eta_numeric);
    CHECK(format_csv_row(window).find(",,") != std::string::npos);
}

TEST_CASE("CSV rows round-trip at 12 significant digits",
          "[sweep][property]") {
    SweepSpec spec;
    spec.mode = CycleMode::FiveStroke;
    spec.b_values = {0.1, kLn2, 1.0, 5.0};
    spec.gamma_values = {0.3, 0.5, 0.6, 0.75, 0.9, 1.0};
    spec.r_values = {1.0, 2.0, 5.0};
    const auto lines = lines_of(sweep_csv(spec));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        for (std::size_t c = 1; c + 1 < fields.size(); ++c) {
            if (fields[c].empty()) {
                continue;
            }
            REQUIRE(format_real(std::stod(fields[c])) == fields[c]);
        }
        if (fields[17] == "1" && !fields[13].empty()) {
            REQUIRE(std::abs(std::stod(fields[12]) - std::stod(fields[13])) <=
                    1e-10);
        }
    }
}

TEST_CASE("sweep validation and output errors", "[sweep]") {
    SweepSpec empty;
    CHECK_THROWS_AS(empty.validate(), InvalidParameterError);

    SweepSpec bad;
    bad.b_values = {1.0};
    bad.gamma_values = {1.2};
    CHECK_THROWS_AS(run_sweep(bad), InvalidParameterError);

    SweepSpec three_with_r;
    three_with_r.b_values = {1.0};
    three_with_r.gamma_values = {0.7};
    three_with_r.r_values = {2.0};
    CHECK_THROWS_AS(three_with_r.validate(), InvalidParameterError);

    SweepSpec unwritable;
    unwritable.b_values = {1.0};
    unwritable.gamma_values = {0.7};
    unwritable.output_path = "/nonexistent-dir/out.csv";
    CHECK_THROWS_AS(write_sweep(unwritable), OutputError);
}
