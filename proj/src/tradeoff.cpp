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

#include "isac/tradeoff.hpp"

#include "isac/errors.hpp"
#include "isac/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>

namespace isac::tradeoff {

bool weakly_dominates(const TradeoffPoint& q, const TradeoffPoint& p)
{
    return q.rate >= p.rate && q.crlb_a <= p.crlb_a;
}

bool dominates(const TradeoffPoint& q, const TradeoffPoint& p)
{
    return weakly_dominates(q, p) && (q.rate > p.rate || q.crlb_a < p.crlb_a);
}

RateTable::RateTable(const SystemParams& params, comm::RateOptions options)
    : params_(params), options_(std::move(options))
{
    params_.validate();
}

void RateTable::fill(std::span<const std::size_t> l_grid, std::span<const double> pc_grid)
{
    std::vector<std::pair<std::size_t, double>> missing;
    for (const std::size_t l : l_grid) {
        for (const double p : pc_grid) {
            if (!table_.contains({l, p}) &&
                std::find(missing.begin(), missing.end(), std::pair{l, p}) == missing.end()) {
                missing.emplace_back(l, p);
            }
        }
    }
    std::vector<double> values(missing.size());
    struct Context {
        const RateTable* self;
        const std::vector<std::pair<std::size_t, double>>* keys;
        std::vector<double>* values;
    } context{this, &missing, &values};
    mc::detail::parallel_for(
        missing.size(),
        [](std::size_t i, void* raw) {
            auto* ctx = static_cast<Context*>(raw);
            SystemParams params = ctx->self->params_;
            params.p_c = (*ctx->keys)[i].second;
            (*ctx->values)[i] = comm::rate_analytical(params, (*ctx->keys)[i].first, ctx->self->options_).rate;
        },
        &context);
    for (std::size_t i = 0; i < missing.size(); ++i) {
        table_[missing[i]] = values[i];
    }
}

double RateTable::rate(std::size_t l, double p_c)
{
    const auto it = table_.find({l, p_c});
    if (it != table_.end()) {
        return it->second;
    }
    const std::array<std::size_t, 1> ls{l};
    const std::array<double, 1> ps{p_c};
    fill(ls, ps);
    return table_.at({l, p_c});
}

std::vector<TradeoffPoint> pareto_front(std::span<const TradeoffPoint> points)
{
    std::vector<TradeoffPoint> out;
    for (const auto& p : points) {
        if (!p.feasible) {
            continue;
        }
        const bool beaten = std::any_of(points.begin(), points.end(),
                                        [&](const TradeoffPoint& q) { return q.feasible && dominates(q, p); });
        const bool duplicate = std::any_of(out.begin(), out.end(), [&](const TradeoffPoint& q) {
            return q.rate == p.rate && q.crlb_a == p.crlb_a;
        });
        if (!beaten && !duplicate) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), [](const TradeoffPoint& a, const TradeoffPoint& b) {
        return a.rate != b.rate ? a.rate < b.rate : a.crlb_a < b.crlb_a;
    });
    return out;
}

std::vector<TradeoffPoint> time_sharing_baseline(const TradeoffPoint& corner_comm, const TradeoffPoint& corner_sense,
                                                 std::span<const double> tau_grid, Interpolation interpolation)
{
    if (!corner_comm.feasible || !corner_sense.feasible) {
        throw DomainError("time_sharing_baseline: both corners must be feasible");
    }
    std::vector<TradeoffPoint> out;
    out.reserve(tau_grid.size());
    for (const double tau : tau_grid) {
        if (!(tau >= 0.0 && tau <= 1.0)) {
            throw DomainError("time_sharing_baseline: tau must lie in [0, 1]");
        }
        TradeoffPoint p;
        p.feasible = true;
        if (interpolation == Interpolation::inverse_time) {
            p.rate = tau * corner_comm.rate;
            p.crlb_a = tau < 1.0 ? corner_sense.crlb_a / (1.0 - tau) : INFINITY;
            p.crlb_a_scaled = tau < 1.0 ? corner_sense.crlb_a_scaled / (1.0 - tau) : INFINITY;
        } else {
            p.rate = tau * corner_comm.rate + (1.0 - tau) * corner_sense.rate;
            p.crlb_a = tau * corner_comm.crlb_a + (1.0 - tau) * corner_sense.crlb_a;
            p.crlb_a_scaled = tau * corner_comm.crlb_a_scaled + (1.0 - tau) * corner_sense.crlb_a_scaled;
        }
        p.backhaul_used = tau * corner_comm.backhaul_used + (1.0 - tau) * corner_sense.backhaul_used;
        out.push_back(p);
    }
    return out;
}

Frontier enumerate_frontier(const SystemParams& params, std::span<const std::size_t> n_grid,
                            std::span<const std::size_t> l_grid, std::span<const double> pc_grid,
                            const TradeoffOptions& options, RateTable* table)
{
    params.validate();
    if (n_grid.empty() || l_grid.empty() || pc_grid.empty()) {
        throw DomainError("enumerate_frontier: grids must be nonempty");
    }
    for (const std::size_t n : n_grid) {
        if (n < 2) {
            throw DomainError("enumerate_frontier: sensing cluster sizes must be >= 2");
        }
    }
    for (const std::size_t l : l_grid) {
        if (l < 1) {
            throw DomainError("enumerate_frontier: communication cluster sizes must be >= 1");
        }
    }
    for (const double p : pc_grid) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw DomainError("enumerate_frontier: p_c must lie in [0, 1]");
        }
    }

    RateTable own(params, options.rate);
    RateTable& rates = table ? *table : own;
    rates.fill(l_grid, pc_grid);

    Frontier out;
    for (const std::size_t n : n_grid) {
        for (const std::size_t l : l_grid) {
            for (const double p : pc_grid) {
                SystemParams local = params;
                local.p_c = p;
                TradeoffPoint point;
                point.n = n;
                point.l = l;
                point.p_c = p;
                point.rate = rates.rate(l, p);
                if (local.p_s() > 0.0) {
                    const auto gain = sensing::sensing_gain(local);
                    point.crlb_a = sensing::crlb_with_acceptance(local, gain, n, options.variant, options.acceptance);
                    point.crlb_a_scaled = sensing::crlb_with_acceptance(local, gain, n, sensing::CrlbaVariant::ln_squared,
                                                                        options.acceptance);
                } else {
                    point.crlb_a = INFINITY;
                    point.crlb_a_scaled = INFINITY;
                }
                point.backhaul_used = point.rate + params.e_sense * static_cast<double>(n);
                point.feasible = point.backhaul_used <= params.c_backhaul;
                out.evaluated.push_back(point);
            }
        }
    }

    out.points = pareto_front(out.evaluated);
    if (out.points.empty()) {
        return out;
    }
    // Ascending rate order puts the CRLB-optimal corner first and the rate-optimal one last.
    out.tau = options.tau_grid;
    out.baseline = time_sharing_baseline(out.points.back(), out.points.front(), out.tau, options.interpolation);
    return out;
}

} // namespace isac::tradeoff
