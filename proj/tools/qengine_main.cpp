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

// Command-line front end: cycle, sweep, verify.

#include "qengine/config.hpp"
#include "qengine/engine.hpp"
#include "qengine/report.hpp"
#include "qengine/sweep.hpp"
#include "qengine/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitVerifyFailed = 3;

constexpr double kDefaultB = 1.0;

struct CycleFlags {
    std::optional<std::string> mode;
    std::optional<std::string> b;
    std::optional<std::string> gamma;
    std::optional<std::string> r;
    std::optional<std::string> config;
    bool analytic = false;
    bool numeric = false;
    bool both = false;
};

struct SweepFlags {
    std::optional<std::string> mode;
    std::optional<std::string> b_values;
    std::optional<std::string> gamma_values;
    std::optional<std::string> r_values;
    std::optional<std::string> out;
    std::optional<std::string> config;
};

struct VerifyFlags {
    std::optional<std::string> grid_b;
    std::optional<std::string> grid_gamma;
    std::optional<std::string> grid_r;
    std::optional<std::string> perturb;
};

qengine::ConfigFile base_config(const std::optional<std::string> &path) {
    return path ? qengine::load_config(*path) : qengine::ConfigFile{};
}

int cmd_cycle(const CycleFlags &flags) {
    auto config = base_config(flags.config);
    if (flags.mode) {
        config.mode = qengine::parse_mode(*flags.mode);
    }
    if (flags.b) {
        config.b = qengine::parse_real(*flags.b);
    }
    if (flags.gamma) {
        config.gamma = qengine::parse_real(*flags.gamma);
    }
    if (flags.r) {
        config.r = qengine::parse_real(*flags.r);
    }
    if (!config.b) {
        config.b = kDefaultB;
    }
    const auto params = qengine::to_cycle_params(config);

    const bool analytic = flags.analytic || flags.both;
    const bool numeric = flags.numeric || flags.both || !flags.analytic;
    if (numeric) {
        std::cout << qengine::format_ledger(qengine::run_numeric(params));
    }
    if (analytic) {
        std::cout << qengine::format_ledger(qengine::run_analytic(params));
    }
    return kExitOk;
}

int cmd_sweep(const SweepFlags &flags) {
    auto config = base_config(flags.config);
    if (flags.mode) {
        config.mode = qengine::parse_mode(*flags.mode);
    }
    if (flags.b_values) {
        config.b_values = qengine::parse_real_list(*flags.b_values);
    }
    if (flags.gamma_values) {
        config.gamma_values = qengine::parse_real_list(*flags.gamma_values);
    }
    if (flags.r_values) {
        config.r_values = qengine::parse_real_list(*flags.r_values);
    }
    if (flags.out) {
        config.output = *flags.out;
    }
    if (!config.mode || !config.b_values || !config.gamma_values ||
        !config.output) {
        throw qengine::ConfigError(
            "sweep needs --mode, --b-values, --gamma-values and --out");
    }

    qengine::SweepSpec spec;
    spec.mode = *config.mode;
    spec.b_values = *config.b_values;
    spec.gamma_values = *config.gamma_values;
    if (config.r_values) {
        spec.r_values = *config.r_values;
    }
    spec.output_path = *config.output;
    spec.validate();
    qengine::write_sweep(spec);
    return kExitOk;
}

int cmd_verify(const VerifyFlags &flags) {
    qengine::VerifyOptions options;
    if (flags.grid_b) {
        options.b_grid = qengine::parse_real_list(*flags.grid_b);
    }
    if (flags.grid_gamma) {
        options.gamma_grid = qengine::parse_real_list(*flags.grid_gamma);
    }
    if (flags.grid_r) {
        options.r_grid = qengine::parse_real_list(*flags.grid_r);
    }
    options.perturb = flags.perturb;
    const auto report = qengine::run_verify(options);
    std::cout << qengine::format_verify_report(report);
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Measurement-driven single-qubit engine simulator"};
    app.require_subcommand(1);

    CycleFlags cycle_flags;
    auto *cycle = app.add_subcommand("cycle", "Run one engine cycle");
    cycle->add_option("--mode", cycle_flags.mode, "three or five")
        ->check(CLI::IsMember({"three", "five"}));
    cycle->add_option("--b", cycle_flags.b,
                      "Inverse temperature beta*hbar*omega_0 (default 1)");
    cycle->add_option("--gamma", cycle_flags.gamma, "Normalized strength");
    cycle->add_option("--r", cycle_flags.r, "Frequency ratio omega/omega_0");
    cycle->add_option("--config", cycle_flags.config, "key=value config file");
    auto *analytic = cycle->add_flag("--analytic", cycle_flags.analytic,
                                     "Closed-form ledger only");
    auto *numeric = cycle->add_flag("--numeric", cycle_flags.numeric,
                                    "Numeric ledger only (default)");
    auto *both = cycle->add_flag("--both", cycle_flags.both,
                                 "Numeric and closed-form ledgers");
    analytic->excludes(numeric)->excludes(both);
    numeric->excludes(both);

    SweepFlags sweep_flags;
    auto *sweep = app.add_subcommand("sweep", "Sweep a parameter grid to CSV");
    sweep->add_option("--mode", sweep_flags.mode, "three or five")
        ->check(CLI::IsMember({"three", "five"}));
    sweep->add_option("--b-values", sweep_flags.b_values, "Comma list");
    sweep->add_option("--gamma-values", sweep_flags.gamma_values,
                      "Comma list");
    sweep->add_option("--r-values", sweep_flags.r_values,
                      "Comma list (default 1)");
    sweep->add_option("--out", sweep_flags.out, "CSV path, - for stdout");
    sweep->add_option("--config", sweep_flags.config, "key=value config file");

    VerifyFlags verify_flags;
    auto *verify =
        app.add_subcommand("verify", "Cross-check numeric against closed form");
    verify->add_option("--grid-b", verify_flags.grid_b, "Comma list");
    verify->add_option("--grid-gamma", verify_flags.grid_gamma, "Comma list");
    verify->add_option("--grid-r", verify_flags.grid_r, "Comma list");
    verify->add_option("--perturb", verify_flags.perturb,
                       "Inject a fault into one ledger field")
        ->check(CLI::IsMember({"qin", "qout", "wapi", "wapii", "delta", "wext",
                               "eta"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cycle) {
            return cmd_cycle(cycle_flags);
        }
        if (*sweep) {
            return cmd_sweep(sweep_flags);
        }
        return cmd_verify(verify_flags);
    } catch (const qengine::ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qengine::OutputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qengine::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidParams;
    }
}
