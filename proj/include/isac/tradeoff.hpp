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

#ifndef ISAC_TRADEOFF_HPP
#define ISAC_TRADEOFF_HPP

#include "isac/communication.hpp"
#include "isac/sensing.hpp"
#include "isac/system_params.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace isac::tradeoff {

/// One (N, L, p_c) configuration. rate in nats per channel use, CRLB values in km^2.
struct TradeoffPoint {
    std::size_t n = 2;
    std::size_t l = 1;
    double p_c = 0.5;
    double rate = 0.0;
    double crlb_a = 0.0;        ///< objective variant (TradeoffOptions::variant)
    double crlb_a_scaled = 0.0; ///< kappa_s-scaled 1 / ln^2 N form, reported alongside
    double backhaul_used = 0.0; ///< rate + e_sense * n
    bool feasible = false;
};

/// q dominates p: no worse on both axes (higher rate, lower CRLB) and better on one.
bool dominates(const TradeoffPoint& q, const TradeoffPoint& p);
/// No worse on both axes.
bool weakly_dominates(const TradeoffPoint& q, const TradeoffPoint& p);

enum class Interpolation {
    inverse_time, ///< CRLB = crlb_sense / (1 - tau), rate = tau * rate_comm
    linear,       ///< both coordinates interpolated linearly between the corners
};

struct Frontier {
    std::vector<TradeoffPoint> evaluated; ///< full grid in (n, l, p_c) order
    std::vector<TradeoffPoint> points;    ///< nondominated feasible points, ascending rate
    std::vector<TradeoffPoint> baseline;  ///< time sharing between the two corners
    std::vector<double> tau;              ///< time fraction of each baseline point
};

struct TradeoffOptions {
    sensing::CrlbaVariant variant = sensing::CrlbaVariant::consistent;
    sensing::AcceptanceForm acceptance = sensing::AcceptanceForm::poisson_sum;
    comm::RateOptions rate;
    Interpolation interpolation = Interpolation::inverse_time;
    std::vector<double> tau_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
};

/// R_c memoized on (L, p_c).
class RateTable {
public:
    RateTable(const SystemParams& params, comm::RateOptions options = {});

    /// Evaluates every missing (l, p_c) pair, in parallel across pairs.
    void fill(std::span<const std::size_t> l_grid, std::span<const double> pc_grid);
    double rate(std::size_t l, double p_c);
    std::size_t size() const { return table_.size(); }

private:
    SystemParams params_;
    comm::RateOptions options_;
    std::map<std::pair<std::size_t, double>, double> table_;
};

/// Nondominated subset of the feasible points, sorted by ascending rate (ties by CRLB).
std::vector<TradeoffPoint> pareto_front(std::span<const TradeoffPoint> points);

/// Time sharing between a rate-optimal and a CRLB-optimal corner. tau is the fraction
/// of time spent in the communication configuration; tau = 1 gives CRLB = +inf under
/// inverse_time.
std::vector<TradeoffPoint> time_sharing_baseline(const TradeoffPoint& corner_comm, const TradeoffPoint& corner_sense,
                                                 std::span<const double> tau_grid,
                                                 Interpolation interpolation = Interpolation::inverse_time);

/// Grid enumeration under rate + e_sense * n <= c_backhaul. An empty feasible set gives
/// an empty frontier and baseline. Uses `table` when given, otherwise a private one.
Frontier enumerate_frontier(const SystemParams& params, std::span<const std::size_t> n_grid,
                            std::span<const std::size_t> l_grid, std::span<const double> pc_grid,
                            const TradeoffOptions& options = {}, RateTable* table = nullptr);

} // namespace isac::tradeoff

#endif // ISAC_TRADEOFF_HPP
