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

#ifndef ISAC_NET_CONFIG_HPP
#define ISAC_NET_CONFIG_HPP

#include "isac/sensing.hpp"
#include "isac/system_params.hpp"
#include "isac/tradeoff.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace isac::cli {

/// Parse or validation failure; the message carries "source:line:" when known.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct Grids {
    std::vector<std::size_t> n;
    std::vector<std::size_t> l;
    std::vector<double> p_c;
    std::vector<double> mu;
    std::vector<int> psi;
    std::vector<double> tau;
};

struct RunOptions {
    sensing::AcceptanceForm kappa_form = sensing::AcceptanceForm::poisson_sum;
    sensing::CrlbaVariant crlba_variant = sensing::CrlbaVariant::consistent;
    tradeoff::Interpolation interpolation = tradeoff::Interpolation::inverse_time;
    bool bits = false;
    bool monte_carlo = true;
    std::vector<std::string> checks;
};

struct ExperimentConfig {
    std::string experiment;
    SystemParams params;
    Grids grids;
    RunOptions options;
    std::size_t realizations = 100000;
    std::uint64_t seed = 20260416;
    std::string output; ///< empty: standard output
    Format format = Format::csv;

    /// Throws ConfigError naming the violated invariant.
    void validate() const;
};

/// Built-in defaults for `experiment`. Only "default" is known.
ExperimentConfig preset(const std::string& name, const std::string& experiment);

/// Applies a TOML-style file (top-level run keys, [params], [grid], [options]) on top of
/// `base`. Supported values: integers, floats, booleans, "strings", flat [arrays].
void apply_config_text(ExperimentConfig& config, const std::string& text, const std::string& source);

/// Resolved config as a JSON tree (run keys, then params, grid, options). The output
/// path is a location, not a parameter, and is left out.
nlohmann::ordered_json config_json(const ExperimentConfig& config);

/// The same tree in the config-file syntax; accepted back by apply_config_text.
std::string render_config(const ExperimentConfig& config);

} // namespace isac::cli

#endif // ISAC_NET_CONFIG_HPP
