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

#include "isac/montecarlo.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace {

using namespace isac;

TEST(Substream, DistinctAndReproducible)
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        seen.insert(mc::substream_seed(42, i));
    }
    EXPECT_EQ(seen.size(), 10000u);
    EXPECT_EQ(mc::substream_seed(42, 7), mc::substream_seed(42, 7));
    EXPECT_NE(mc::substream_seed(42, 7), mc::substream_seed(43, 7));
}

TEST(Summarize, KnownSample)
{
    const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    const EstimateWithCI e = mc::summarize(x);
    EXPECT_DOUBLE_EQ(e.mean, 2.5);
    EXPECT_EQ(e.n_samples, 4u);
    // sample variance 5/3
    EXPECT_NEAR(e.half_width_95, 1.96 * std::sqrt(5.0 / 3.0 / 4.0), 1e-14);
    EXPECT_NEAR(e.standard_error(), std::sqrt(5.0 / 12.0), 1e-14);
}

TEST(Summarize, DegenerateInputs)
{
    EXPECT_EQ(mc::summarize(std::vector<double>{}).n_samples, 0u);
    const EstimateWithCI one = mc::summarize(std::vector<double>{3.0});
    EXPECT_EQ(one.mean, 3.0);
    EXPECT_EQ(one.half_width_95, 0.0);
    const EstimateWithCI inf = mc::summarize(std::vector<double>{1.0, INFINITY});
    EXPECT_TRUE(std::isinf(inf.mean));
    EXPECT_TRUE(std::isinf(inf.half_width_95));
}

TEST(MapRealizations, SerialEqualsParallelForAnyThreadCount)
{
    auto kernel = [](Rng& rng, std::size_t i) {
        std::normal_distribution<double> normal;
        return normal(rng) + static_cast<double>(i % 3);
    };
    const auto serial = mc::map_realizations<double>(5000, 9, kernel, mc::Execution::serial);
    for (const int threads : {1, 2, 3, 8}) {
        mc::ThreadOverride guard(threads);
        EXPECT_EQ(mc::worker_threads(), threads);
        const auto parallel = mc::map_realizations<double>(5000, 9, kernel, mc::Execution::parallel);
        EXPECT_EQ(serial, parallel) << threads << " threads";
    }
}

TEST(MapRealizations, SeedChangesOutput)
{
    auto kernel = [](Rng& rng, std::size_t) { return std::uniform_real_distribution<double>()(rng); };
    EXPECT_NE(mc::map_realizations<double>(10, 1, kernel), mc::map_realizations<double>(10, 2, kernel));
}

TEST(MapRealizations, PropagatesExceptions)
{
    auto kernel = [](Rng&, std::size_t i) -> double {
        if (i == 77) {
            throw std::runtime_error("boom");
        }
        return 0.0;
    };
    EXPECT_THROW(mc::map_realizations<double>(100, 1, kernel, mc::Execution::parallel), std::runtime_error);
    EXPECT_THROW(mc::map_realizations<double>(100, 1, kernel, mc::Execution::serial), std::runtime_error);
}

TEST(ThreadOverride, RestoresPrevious)
{
    const int before = mc::worker_threads();
    {
        mc::ThreadOverride outer(5);
        {
            mc::ThreadOverride inner(2);
            EXPECT_EQ(mc::worker_threads(), 2);
        }
        EXPECT_EQ(mc::worker_threads(), 5);
    }
    EXPECT_EQ(mc::worker_threads(), before);
}

} // namespace
