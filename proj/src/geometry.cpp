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

#include "isac/geometry.hpp"

#include "isac/errors.hpp"
#include "isac/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace isac {

void SystemParams::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok) {
            throw DomainError(std::string("invalid SystemParams: ") + what);
        }
    };
    require(lambda_b > 0.0 && lambda_u > 0.0 && lambda_s > 0.0, "all densities must be > 0");
    require(alpha > 2.0, "alpha must be > 2");
    require(beta >= 2.0, "beta must be >= 2");
    require(p_c >= 0.0 && p_c <= 1.0, "p_c must lie in [0, 1]");
    require(m_t >= 2, "m_t must be >= 2");
    require(m_r >= 1, "m_r must be >= 1");
    require(psi >= 1, "psi must be >= 1");
    require(sigma_rcs > 0.0 && sigma_s_sq > 0.0, "sigma_rcs and sigma_s_sq must be > 0");
    require(b_eff > 0.0 && f_c > 0.0, "b_eff and f_c must be > 0");
    require(zeta_sq_unit > 0.0, "zeta_sq_unit must be > 0");
    require(c_backhaul >= 0.0 && e_sense >= 0.0, "c_backhaul and e_sense must be >= 0");
    require(!g_r_override || *g_r_override > 0.0, "g_r must be > 0");
}

namespace geometry {

using std::numbers::pi;

double window_radius(double lambda, std::size_t k_needed, double min_mean_points)
{
    if (!(lambda > 0.0) || k_needed < 1) {
        throw DomainError("window_radius: requires lambda > 0 and k_needed >= 1");
    }
    const double mean_points =
        std::max({min_mean_points, 20.0, 4.0 * static_cast<double>(k_needed)});
    return std::sqrt(mean_points / (lambda * pi));
}

NetworkRealization sample_ppp(double lambda, std::size_t k_needed, Rng& rng, double min_mean_points)
{
    const double radius = window_radius(lambda, k_needed, min_mean_points);
    const double horizon = lambda * pi * radius * radius;

    std::exponential_distribution<double> gap(1.0);
    std::uniform_real_distribution<double> bearing(0.0, 2.0 * pi);

    NetworkRealization out;
    out.window_radius = radius;
    out.distances.reserve(static_cast<std::size_t>(horizon * 1.2) + 8);
    out.angles.reserve(out.distances.capacity());
    for (;;) {
        out.distances.clear();
        out.angles.clear();
        double arrival = gap(rng);
        while (arrival <= horizon) {
            out.distances.push_back(std::sqrt(arrival / (lambda * pi)));
            out.angles.push_back(bearing(rng));
            arrival += gap(rng);
        }
        if (out.distances.size() >= k_needed) {
            return out;
        }
    }
}

double expected_nth_distance(std::size_t n, double lambda, DistanceLaw law)
{
    if (n < 1 || !(lambda > 0.0)) {
        throw DomainError("expected_nth_distance: requires n >= 1 and lambda > 0");
    }
    const double nd = static_cast<double>(n);
    if (law == DistanceLaw::approximate) {
        return std::sqrt(nd / (lambda * pi));
    }
    const double log_ratio = numerics::ln_gamma(nd + 0.5) - numerics::ln_gamma(nd);
    return std::exp(log_ratio) / std::sqrt(lambda * pi);
}

double association_area_factor(std::size_t n, DistanceLaw law)
{
    if (n < 1) {
        throw DomainError("association_area_factor: requires n >= 1");
    }
    const double nd = static_cast<double>(n);
    if (law == DistanceLaw::approximate) {
        return nd;
    }
    return std::exp(2.0 * (numerics::ln_gamma(nd + 0.5) - numerics::ln_gamma(nd)));
}

double distance_ratio_pdf(double eta, std::size_t l)
{
    if (l < 2) {
        throw DomainError("distance_ratio_pdf: cluster size must be >= 2 (l = 1 is the point mass eta = 1)");
    }
    if (!(eta > 0.0 && eta < 1.0)) {
        throw DomainError("distance_ratio_pdf: eta must lie in (0, 1)");
    }
    const double ld = static_cast<double>(l);
    return 2.0 * (ld - 1.0) * eta * std::pow(1.0 - eta * eta, ld - 2.0);
}

double interference_tail_bound(double lambda, double alpha, double radius)
{
    if (!(alpha > 2.0) || !(radius > 0.0)) {
        throw DomainError("interference_tail_bound: requires alpha > 2 and radius > 0");
    }
    return 2.0 * pi * lambda * std::pow(radius, 2.0 - alpha) / (alpha - 2.0);
}

nlohmann::json to_json(const NetworkRealization& realization)
{
    nlohmann::json points = nlohmann::json::array();
    for (std::size_t i = 0; i < realization.size(); ++i) {
        points.push_back({realization.distances[i], realization.angles[i]});
    }
    return {{"window_radius", realization.window_radius}, {"points", points}};
}

} // namespace geometry
} // namespace isac
