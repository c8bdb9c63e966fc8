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

#include "output.hpp"

#include "isac/version.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

namespace isac::cli {

void Table::add_column(std::string name, std::string description)
{
    columns.push_back(std::move(name));
    descriptions.push_back(std::move(description));
}

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size()) {
        throw std::logic_error("Table::add_row: row width does not match the header");
    }
    rows.push_back(std::move(row));
}

std::string git_blob_sha1(const std::string& content)
{
    const std::string header = fmt::format("blob {}", content.size());
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, header.data(), header.size() + 1) != 1 ||
        EVP_DigestUpdate(ctx, content.data(), content.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, digest, &length) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("git_blob_sha1: digest failed");
    }
    EVP_MD_CTX_free(ctx);
    std::string hex;
    for (unsigned int i = 0; i < length; ++i) {
        hex += fmt::format("{:02x}", digest[i]);
    }
    return hex;
}

nlohmann::ordered_json manifest(const ExperimentConfig& config)
{
    nlohmann::ordered_json m;
    m["tool"] = "isac-net";
    m["version"] = kVersion;
    m["experiment"] = config.experiment;
    m["seed"] = config.seed;
    m["config_sha1"] = git_blob_sha1(render_config(config));
    nlohmann::ordered_json modules;
    for (const char* name : {"numerics", "geometry", "channel", "sensing", "communication", "tradeoff", "cli"}) {
        modules[name] = kVersion;
    }
    m["modules"] = modules;
    return m;
}

namespace {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::string cell_text(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, double>) {
                if (std::isnan(v)) {
                    return "nan";
                }
                if (std::isinf(v)) {
                    return v > 0 ? "inf" : "-inf";
                }
                return fmt::format("{}", v);
            } else {
                return fmt::format("{}", v);
            }
        },
        cell);
}

nlohmann::ordered_json cell_json(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) {
                    return nullptr;
                }
            }
            return v;
        },
        cell);
}

} // namespace

std::string render_csv(const ExperimentConfig& config, const Table& table, const std::vector<std::string>& notes)
{
    constexpr const char* eol = "\r\n";
    std::string out;
    std::istringstream rendered(render_config(config));
    for (std::string line; std::getline(rendered, line);) {
        out += line.empty() ? std::string("#") : "# " + line;
        out += eol;
    }
    out += "#";
    out += eol;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += fmt::format("# column {}: {}{}", table.columns[i], table.descriptions[i], eol);
    }
    for (const auto& note : notes) {
        out += "# note: " + note + eol;
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + csv_field(table.columns[i]);
    }
    out += eol;
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + csv_field(cell_text(row[i]));
        }
        out += eol;
    }
    return out;
}

std::string render_json(const ExperimentConfig& config, const Table& table, const nlohmann::ordered_json& extra)
{
    nlohmann::ordered_json doc;
    doc["config"] = config_json(config);
    nlohmann::ordered_json columns;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        columns[table.columns[i]] = table.descriptions[i];
    }
    doc["columns"] = columns;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json item;
        for (std::size_t i = 0; i < row.size(); ++i) {
            item[table.columns[i]] = cell_json(row[i]);
        }
        results.push_back(item);
    }
    doc["results"] = results;
    if (extra.is_object()) {
        for (const auto& [key, value] : extra.items()) {
            doc[key] = value;
        }
    }
    doc["manifest"] = manifest(config);
    return doc.dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content << std::flush;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    file << content;
    if (!file) {
        throw std::runtime_error("failed writing output file '" + path + "'");
    }
}

std::string sibling_path(const std::string& base, const std::string& tag)
{
    const std::filesystem::path p(base);
    return (p.parent_path() / (p.stem().string() + "." + tag + p.extension().string())).string();
}

} // namespace isac::cli
