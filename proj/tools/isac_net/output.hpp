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

#ifndef ISAC_NET_OUTPUT_HPP
#define ISAC_NET_OUTPUT_HPP

#include "config.hpp"

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace isac::cli {

using Cell = std::variant<double, long long, bool, std::string>;

/// Column-documented result table.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::string> descriptions; ///< one per column, emitted as metadata
    std::vector<std::vector<Cell>> rows;

    void add_column(std::string name, std::string description);
    void add_row(std::vector<Cell> row);
};

/// git-style object id: SHA-1 of "blob <size>\0" + content, lowercase hex.
std::string git_blob_sha1(const std::string& content);

/// Run manifest: tool and module versions, experiment, seed, config hash.
nlohmann::ordered_json manifest(const ExperimentConfig& config);

/// RFC 4180 CSV (CRLF line ends) preceded by '#' metadata lines: the resolved
/// config, column descriptions, and `notes`.
std::string render_csv(const ExperimentConfig& config, const Table& table, const std::vector<std::string>& notes);

/// {config, results, [extra keys], manifest}. Non-finite numbers become null.
std::string render_json(const ExperimentConfig& config, const Table& table, const nlohmann::ordered_json& extra);

/// Writes `content` to `path`, or to standard output when path is empty.
void write_output(const std::string& path, const std::string& content);

/// `base` with `tag` inserted before the extension: out.csv -> out.baseline.csv.
std::string sibling_path(const std::string& base, const std::string& tag);

} // namespace isac::cli

#endif // ISAC_NET_OUTPUT_HPP
