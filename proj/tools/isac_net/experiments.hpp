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

#ifndef ISAC_NET_EXPERIMENTS_HPP
#define ISAC_NET_EXPERIMENTS_HPP

#include "config.hpp"
#include "output.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace isac::cli {

struct ExperimentOutput {
    Table table;
    std::vector<std::string> notes;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object(); ///< JSON-only sections
    Table secondary;            ///< optional second table (tradeoff baseline)
    std::string secondary_tag;  ///< file tag of the second table; empty if none
    bool all_passed = true;     ///< validate only
};

ExperimentOutput run_sensing_crlb(const ExperimentConfig& config);
ExperimentOutput run_acceptance(const ExperimentConfig& config);
ExperimentOutput run_comm_rate(const ExperimentConfig& config);
ExperimentOutput run_tradeoff(const ExperimentConfig& config);
ExperimentOutput run_validate(const ExperimentConfig& config);

} // namespace isac::cli

#endif // ISAC_NET_EXPERIMENTS_HPP
