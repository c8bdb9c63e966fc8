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

// Serial vs parallel Monte Carlo kernels. Arg 0 is the serial reference; Arg k > 0
// runs the parallel kernel on k threads.

#include "isac/communication.hpp"
#include "isac/sensing.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace isac;

mc::Execution execution_for(int threads)
{
    return threads == 0 ? mc::Execution::serial : mc::Execution::parallel;
}

void BM_CrlbMonteCarlo(benchmark::State& state)
{
    const auto threads = static_cast<int>(state.range(0));
    mc::ThreadOverride guard(threads);
    SystemParams params;
    params.p_c = 0.0;
    const auto gain = sensing::SensingGain::normalized(1.0);
    for (auto _ : state) {
        const auto r = sensing::crlb_monte_carlo(params, gain, 10, 20000, 1, execution_for(threads));
        benchmark::DoNotOptimize(r.estimate.mean);
    }
    state.SetItemsProcessed(state.iterations() * 20000);
}

void BM_RateMonteCarlo(benchmark::State& state)
{
    const auto threads = static_cast<int>(state.range(0));
    mc::ThreadOverride guard(threads);
    SystemParams params;
    params.p_c = 0.6;
    comm::RateMcOptions options;
    options.execution = execution_for(threads);
    for (auto _ : state) {
        const auto r = comm::rate_monte_carlo(params, 3, 2000, 1, options);
        benchmark::DoNotOptimize(r.rate);
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_LoadAcceptance(benchmark::State& state)
{
    const auto threads = static_cast<int>(state.range(0));
    mc::ThreadOverride guard(threads);
    for (auto _ : state) {
        const auto r = sensing::load_acceptance_monte_carlo(15, 20.0, sensing::LoadRule::sensing, 200000, 1,
                                                            execution_for(threads));
        benchmark::DoNotOptimize(r.mean);
    }
    state.SetItemsProcessed(state.iterations() * 200000);
}

void BM_RateAnalytical(benchmark::State& state)
{
    SystemParams params;
    params.p_c = 0.6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(comm::rate_analytical(params, static_cast<std::size_t>(state.range(0))).rate);
    }
}

} // namespace

BENCHMARK(BM_CrlbMonteCarlo)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RateMonteCarlo)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LoadAcceptance)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RateAnalytical)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
