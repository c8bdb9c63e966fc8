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
#include "output.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

namespace {

using namespace isac;
using namespace isac::cli;

std::string error_of(ExperimentConfig& config, const std::string& text)
{
    try {
        apply_config_text(config, text, "test.toml");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

TEST(Config, PresetsPerExperiment)
{
    for (const char* experiment : {"sensing-crlb", "acceptance", "comm-rate", "tradeoff", "validate"}) {
        const ExperimentConfig config = preset("default", experiment);
        EXPECT_EQ(config.experiment, experiment);
        EXPECT_NO_THROW(config.validate());
    }
    EXPECT_THROW(preset("nope", "sensing-crlb"), ConfigError);
}

TEST(Config, ParsesSectionsArraysAndSeparators)
{
    ExperimentConfig config = preset("default", "tradeoff");
    apply_config_text(config,
                      "# comment\n"
                      "seed = 1_000\n"
                      "[params]\n"
                      "alpha = 3.5   # trailing\n"
                      "psi = 7\n"
                      "[grid]\n"
                      "n = [2, 3, 5]\n"
                      "p_c = [0.25, 0.5]\n"
                      "[options]\n"
                      "interpolation = \"linear\"\n"
                      "monte_carlo = false\n",
                      "test.toml");
    EXPECT_EQ(config.seed, 1000u);
    EXPECT_EQ(config.params.alpha, 3.5);
    EXPECT_EQ(config.params.psi, 7);
    EXPECT_EQ(config.grids.n, (std::vector<std::size_t>{2, 3, 5}));
    EXPECT_EQ(config.grids.p_c, (std::vector<double>{0.25, 0.5}));
    EXPECT_EQ(config.options.interpolation, tradeoff::Interpolation::linear);
    EXPECT_FALSE(config.options.monte_carlo);
}

TEST(Config, ErrorsCarryLineNumbers)
{
    ExperimentConfig config = preset("default", "comm-rate");
    EXPECT_NE(error_of(config, "\n\nunknown_key = 3\n").find("test.toml:3"), std::string::npos);
    EXPECT_NE(error_of(config, "[params]\nalpha = \"x\"\n").find("test.toml:2"), std::string::npos);
    EXPECT_NE(error_of(config, "[params\n").find("test.toml:1"), std::string::npos);
    EXPECT_NE(error_of(config, "[grid]\nl = [1, 2\n").find("test.toml:2"), std::string::npos);
    EXPECT_NE(error_of(config, "experiment = \"tradeoff\"\n").find("test.toml:1"), std::string::npos);
    EXPECT_NE(error_of(config, "seed = -4\n").find("test.toml:1"), std::string::npos);
}

TEST(Config, ValidateRejectsBadValues)
{
    ExperimentConfig config = preset("default", "comm-rate");
    config.params.alpha = 2.0;
    EXPECT_THROW(config.validate(), ConfigError);
    config = preset("default", "comm-rate");
    config.realizations = 0;
    EXPECT_THROW(config.validate(), ConfigError);
}

TEST(Config, RenderRoundTrips)
{
    ExperimentConfig config = preset("default", "acceptance");
    config.params.lambda_s = 2.5;
    config.grids.psi = {3, 9};
    config.options.kappa_form = sensing::AcceptanceForm::q_psi;
    const std::string rendered = render_config(config);

    ExperimentConfig reparsed = preset("default", "acceptance");
    apply_config_text(reparsed, rendered, "rendered");
    EXPECT_EQ(render_config(reparsed), rendered);
    EXPECT_EQ(config_json(reparsed), config_json(config));
}

TEST(Output, GitBlobHash)
{
    EXPECT_EQ(git_blob_sha1("hello\n"), "ce013625030ba8dba906f756967f9e9ca394464a");
    EXPECT_EQ(git_blob_sha1(""), "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
}

TEST(Output, CsvQuotingAndNonFinite)
{
    const ExperimentConfig config = preset("default", "sensing-crlb");
    Table table;
    table.add_column("name", "a label");
    table.add_column("value", "a number");
    table.add_row({std::string("a,\"b\""), 1.5});
    table.add_row({std::string("plain"), NAN});
    table.add_row({std::string("inf"), -INFINITY});
    EXPECT_THROW(table.add_row({1.0}), std::logic_error);

    const std::string csv = render_csv(config, table, {"hello"});
    EXPECT_NE(csv.find("# column value: a number\r\n"), std::string::npos);
    EXPECT_NE(csv.find("# note: hello\r\n"), std::string::npos);
    EXPECT_NE(csv.find("name,value\r\n\"a,\"\"b\"\"\",1.5\r\nplain,nan\r\ninf,-inf\r\n"), std::string::npos);
}

TEST(Output, JsonStructure)
{
    const ExperimentConfig config = preset("default", "sensing-crlb");
    Table table;
    table.add_column("v", "value");
    table.add_row({INFINITY});
    table.add_row({2.0});
    const auto json = nlohmann::json::parse(render_json(config, table, {{"note", "x"}}));
    EXPECT_TRUE(json["results"][0]["v"].is_null());
    EXPECT_EQ(json["results"][1]["v"], 2.0);
    EXPECT_EQ(json["note"], "x");
    EXPECT_EQ(json["manifest"]["experiment"], "sensing-crlb");
    EXPECT_EQ(json["manifest"]["config_sha1"], git_blob_sha1(render_config(config)));
}

TEST(Output, SiblingPath)
{
    EXPECT_EQ(sibling_path("out/run.csv", "baseline"), "out/run.baseline.csv");
    EXPECT_EQ(sibling_path("run.json", "baseline"), "run.baseline.json");
    EXPECT_EQ(sibling_path("noext", "baseline"), "noext.baseline");
}

} // namespace
