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

#include "isac/numerics.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <cstdlib>
#include <mutex>
#include <string>

#include <omp.h>

namespace isac::mc {

std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index)
{
    auto splitmix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return splitmix(splitmix(master_seed) ^ splitmix(index + 0x632be59bd9b4e019ULL));
}

namespace {
std::atomic<int> thread_override{0};
}

ThreadOverride::ThreadOverride(int threads) : previous_(thread_override.exchange(threads > 0 ? threads : 0)) {}

ThreadOverride::~ThreadOverride()
{
    thread_override.store(previous_);
}

int worker_threads()
{
    if (const int forced = thread_override.load(); forced > 0) {
        return forced;
    }
    if (const char* env = std::getenv("ISAC_NET_THREADS")) {
        try {
            const int requested = std::stoi(env);
            if (requested > 0) {
                return requested;
            }
        } catch (const std::exception&) {
            // unparsable value: fall back to auto
        }
    }
    return omp_get_max_threads();
}

EstimateWithCI summarize(std::span<const double> samples)
{
    EstimateWithCI est;
    est.n_samples = samples.size();
    if (samples.empty()) {
        return est;
    }
    const double n = static_cast<double>(samples.size());
    est.mean = numerics::pairwise_sum(samples) / n;
    if (samples.size() < 2 || !std::isfinite(est.mean)) {
        est.half_width_95 = samples.size() < 2 ? 0.0 : INFINITY;
        return est;
    }
    std::vector<double> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double d = samples[i] - est.mean;
        sq[i] = d * d;
    }
    const double variance = numerics::pairwise_sum(sq) / (n - 1.0);
    est.half_width_95 = 1.96 * std::sqrt(variance / n);
    return est;
}

namespace detail {

void parallel_for(std::size_t n, void (*body)(std::size_t, void*), void* context)
{
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto count = static_cast<std::int64_t>(n);

#pragma omp parallel for schedule(static) num_threads(worker_threads())
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i), context);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace detail
} // namespace isac::mc
