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

#ifndef ISAC_MONTECARLO_HPP
#define ISAC_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <span>
#include <type_traits>
#include <vector>

namespace isac {

using Rng = std::mt19937_64;

/// Monte Carlo scalar estimate with a 95% confidence half-width.
struct EstimateWithCI {
    double mean = 0.0;
    double half_width_95 = 0.0;
    std::size_t n_samples = 0;

    double standard_error() const { return half_width_95 / 1.96; }
};

namespace mc {

enum class Execution { serial, parallel };

/// Seed of the independent substream for realization `index` (SplitMix64 mixing of
/// master seed and index). Depends on nothing else, so results do not depend on
/// how realizations are scheduled across threads.
std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index);

inline Rng substream(std::uint64_t master_seed, std::uint64_t index)
{
    return Rng(substream_seed(master_seed, index));
}

/// Worker count for parallel kernels: an active ThreadOverride, else ISAC_NET_THREADS
/// if set and > 0, else the OpenMP default.
int worker_threads();

/// Process-wide worker count for the lifetime of the object (0 restores auto).
class ThreadOverride {
public:
    explicit ThreadOverride(int threads);
    ~ThreadOverride();
    ThreadOverride(const ThreadOverride&) = delete;
    ThreadOverride& operator=(const ThreadOverride&) = delete;

private:
    int previous_;
};

/// Mean and 95% CI of the samples, using pairwise sums so the result is a pure
/// function of the sample vector.
EstimateWithCI summarize(std::span<const double> samples);

namespace detail {
void parallel_for(std::size_t n, void (*body)(std::size_t, void*), void* context);
}

/// Runs `kernel(rng, index)` for index in [0, n), each call with its own substream,
/// and returns the per-realization results in index order. The serial path is the
/// reference the parallel path must reproduce bit for bit.
template <class T, class Kernel>
std::vector<T> map_realizations(std::size_t n, std::uint64_t seed, Kernel&& kernel,
                                Execution execution = Execution::parallel)
{
    std::vector<T> out(n);
    if (execution == Execution::serial) {
        for (std::size_t i = 0; i < n; ++i) {
            Rng rng = substream(seed, i);
            out[i] = kernel(rng, i);
        }
        return out;
    }

    struct Context {
        std::vector<T>* out;
        std::uint64_t seed;
        std::remove_reference_t<Kernel>* kernel;
    } context{&out, seed, &kernel};

    detail::parallel_for(
        n,
        [](std::size_t i, void* raw) {
            auto* ctx = static_cast<Context*>(raw);
            Rng rng = substream(ctx->seed, i);
            (*ctx->out)[i] = (*ctx->kernel)(rng, i);
        },
        &context);
    return out;
}

} // namespace mc
} // namespace isac

#endif // ISAC_MONTECARLO_HPP
