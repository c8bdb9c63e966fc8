// SPDX-License-Identifier: Apache-2.0
//
// isac-net: analysis of cooperative sensing and communication networks
// Copyright (C) 2026 The isac-net authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "config.hpp"
#include "experiments.hpp"
#include "output.hpp"

#include "isac/errors.hpp"
#include "isac/version.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

namespace {

enum ExitCode { kOk = 0, kNumericsError = 1, kConfigError = 2, kChecksFailed = 3 };

struct Overrides {
    std::string preset = "default";
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> realizations;
    std::optional<std::string> output;
    std::optional<std::string> format;
    std::optional<std::string> kappa_form;
    std::vector<std::string> checks;
    bool bits = false;
    bool no_mc = false;
};

isac::cli::ExperimentConfig resolve(const std::string& experiment, const Overrides& o)
{
    using namespace isac::cli;
    ExperimentConfig config = preset(o.preset, experiment);
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) {
            throw ConfigError("cannot read config file '" + o.config_path + "'");
        }
        std::ostringstream text;
        text << in.rdbuf();
        apply_config_text(config, text.str(), o.config_path);
    }
    // Flags are applied through the config syntax so they get the same checks.
    std::string flags;
    if (o.seed) {
        flags += "seed = " + std::to_string(*o.seed) + "\n";
    }
    if (o.realizations) {
        flags += "realizations = " + std::to_string(*o.realizations) + "\n";
    }
    if (o.format) {
        flags += "format = \"" + *o.format + "\"\n";
    }
    if (o.output) {
        flags += "output = \"" + *o.output + "\"\n";
    }
    flags += "[options]\n";
    if (o.kappa_form) {
        flags += "kappa_form = \"" + *o.kappa_form + "\"\n";
    }
    if (o.bits) {
        flags += "units = \"bits\"\n";
    }
    if (o.no_mc) {
        flags += "monte_carlo = false\n";
    }
    if (!o.checks.empty()) {
        flags += "checks = [";
        for (std::size_t i = 0; i < o.checks.size(); ++i) {
            flags += (i ? ", \"" : "\"") + o.checks[i] + "\"";
        }
        flags += "]\n";
    }
    apply_config_text(config, flags, "command line");
    config.validate();
    return config;
}

int run(const std::string& experiment, const Overrides& overrides)
{
    using namespace isac::cli;
    const ExperimentConfig config = resolve(experiment, overrides);
    std::cerr << manifest(config).dump() << "\n";

    static const std::map<std::string, ExperimentOutput (*)(const ExperimentConfig&)> runners{
        {"sensing-crlb", run_sensing_crlb}, {"acceptance", run_acceptance}, {"comm-rate", run_comm_rate},
        {"tradeoff", run_tradeoff},         {"validate", run_validate},
    };
    const ExperimentOutput result = runners.at(experiment)(config);

    if (config.format == Format::json) {
        write_output(config.output, render_json(config, result.table, result.extra));
    } else {
        write_output(config.output, render_csv(config, result.table, result.notes));
        if (!result.secondary_tag.empty()) {
            if (config.output.empty()) {
                std::cerr << "note: " << result.secondary_tag << " table not written (no --output path)\n";
            } else {
                write_output(sibling_path(config.output, result.secondary_tag),
                             render_csv(config, result.secondary, result.notes));
            }
        }
    }
    return result.all_passed ? kOk : kChecksFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"isac-net: cooperative sensing and communication network analysis"};
    app.set_version_flag("--version", isac::kVersion);
    app.require_subcommand(1);

    Overrides overrides;
    const std::vector<std::pair<std::string, std::string>> experiments{
        {"sensing-crlb", "CRLB vs sensing cluster size: simulation, closed forms, asymptotes"},
        {"acceptance", "acceptance probabilities vs BS-load simulation"},
        {"comm-rate", "average rate vs cluster size and power split: integral and simulation"},
        {"tradeoff", "backhaul-constrained sensing/communication frontier and time sharing"},
        {"validate", "run the oracle checks and report pass/fail"},
    };
    for (const auto& [name, help] : experiments) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--preset", overrides.preset, "built-in parameter set")->capture_default_str();
        sub->add_option("--config", overrides.config_path, "TOML-style config file applied over the preset");
        sub->add_option("--seed", overrides.seed, "master seed");
        sub->add_option("--realizations", overrides.realizations, "Monte Carlo realizations per estimate");
        sub->add_option("--output", overrides.output, "output file (default: standard output)");
        sub->add_option("--format", overrides.format, "csv or json");
        sub->add_option("--kappa-form", overrides.kappa_form,
                        "sensing acceptance form: poisson_sum, q_psi, q_psi_over_psi");
        sub->add_flag("--bits", overrides.bits, "report rates in bits instead of nats");
        sub->add_flag("--no-mc", overrides.no_mc, "skip Monte Carlo columns");
        if (name == "validate") {
            sub->add_option("--checks", overrides.checks, "subset of check ids (c1 ... c9)")->delimiter(',');
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    const std::string experiment = app.get_subcommands().front()->get_name();
    try {
        return run(experiment, overrides);
    } catch (const isac::cli::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    } catch (const isac::ConvergenceError& e) {
        std::cerr << "numerics error: " << e.what() << " (best estimate " << e.best_estimate() << ")\n";
        return kNumericsError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericsError;
    }
}
