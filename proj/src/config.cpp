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

#include "qengine/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qengine {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view kSpace = " \t\r\n";
    const auto first = s.find_first_not_of(kSpace);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(kSpace);
    return s.substr(first, last - first + 1);
}

std::string at_line(std::size_t line, const std::string &what) {
    return "config line " + std::to_string(line) + ": " + what;
}

void check_b(double b) {
    if (!(b > 0.0)) {
        throw InvalidParameterError("b must be > 0");
    }
}

void check_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        std::ostringstream msg;
        msg << "gamma must lie in [0, 1], got " << gamma;
        throw InvalidParameterError(msg.str());
    }
}

void check_r(double r) {
    if (!(r >= 1.0)) {
        std::ostringstream msg;
        msg << "r must be >= 1, got " << r;
        throw InvalidParameterError(msg.str());
    }
}

template <typename Check>
std::vector<double> checked_list(std::string_view value, Check check) {
    auto values = parse_real_list(value);
    for (double v : values) {
        check(v);
    }
    return values;
}

} // namespace

CycleMode parse_mode(std::string_view text) {
    text = trim(text);
    if (text == "three") {
        return CycleMode::ThreeStroke;
    }
    if (text == "five") {
        return CycleMode::FiveStroke;
    }
    throw ConfigError("mode must be 'three' or 'five', got '" +
                      std::string(text) + "'");
}

double parse_real(std::string_view text) {
    text = trim(text);
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end ||
        !std::isfinite(value)) {
        throw ConfigError("malformed number '" + std::string(text) + "'");
    }
    return value;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> values;
    while (true) {
        const auto comma = text.find(',');
        values.push_back(parse_real(text.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return values;
}

ConfigFile parse_config(std::string_view text) {
    ConfigFile config;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(at_line(line_no, "expected key=value"), line_no);
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        try {
            if (key == "mode") {
                config.mode = parse_mode(value);
            } else if (key == "b") {
                check_b(*(config.b = parse_real(value)));
            } else if (key == "gamma") {
                check_gamma(*(config.gamma = parse_real(value)));
            } else if (key == "r") {
                check_r(*(config.r = parse_real(value)));
            } else if (key == "b_values") {
                config.b_values = checked_list(value, check_b);
            } else if (key == "gamma_values") {
                config.gamma_values = checked_list(value, check_gamma);
            } else if (key == "r_values") {
                config.r_values = checked_list(value, check_r);
            } else if (key == "output") {
                config.output = std::string(value);
            } else {
                throw ConfigError("unknown key '" + std::string(key) + "'");
            }
        } catch (const ConfigError &e) {
            throw ConfigError(at_line(line_no, e.what()), line_no);
        } catch (const InvalidParameterError &e) {
            throw InvalidParameterError(at_line(line_no, e.what()));
        }
    }
    return config;
}

ConfigFile load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config file not found: " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

CycleParams to_cycle_params(const ConfigFile &config) {
    if (!config.mode) {
        throw ConfigError("missing mode");
    }
    if (!config.b) {
        throw ConfigError("missing b");
    }
    if (!config.gamma) {
        throw ConfigError("missing gamma");
    }
    CycleParams params{*config.b, *config.gamma, config.r.value_or(1.0),
                       *config.mode};
    params.validate();
    return params;
}

} // namespace qengine
