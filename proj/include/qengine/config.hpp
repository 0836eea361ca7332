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

#include "qengine/engine.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qengine {

/// Malformed config text or flag value. line() is 0 for flag values.
class ConfigError : public Error {
  public:
    ConfigError(const std::string &what, std::size_t line = 0)
        : Error(what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/**
 * @brief Values read from a flat key=value config file.
 *
 * Recognized keys: mode, b, gamma, r, b_values, gamma_values, r_values,
 * output. List values are comma-separated; `#` starts a comment. Every
 * field is optional so that command-line flags can fill or override it.
 */
struct ConfigFile {
    std::optional<CycleMode> mode;
    std::optional<double> b;
    std::optional<double> gamma;
    std::optional<double> r;
    std::optional<std::vector<double>> b_values;
    std::optional<std::vector<double>> gamma_values;
    std::optional<std::vector<double>> r_values;
    std::optional<std::string> output;
};

/// Throws ConfigError when the file is missing or malformed and
/// InvalidParameterError when a value is out of range.
[[nodiscard]] ConfigFile load_config(const std::filesystem::path &path);
[[nodiscard]] ConfigFile parse_config(std::string_view text);

[[nodiscard]] CycleMode parse_mode(std::string_view text);
[[nodiscard]] double parse_real(std::string_view text);
[[nodiscard]] std::vector<double> parse_real_list(std::string_view text);

/// Builds and validates CycleParams; missing mode, b or gamma is a
/// ConfigError, r defaults to 1.
[[nodiscard]] CycleParams to_cycle_params(const ConfigFile &config);

} // namespace qengine
