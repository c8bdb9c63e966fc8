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

#ifndef ISAC_GEOMETRY_HPP
#define ISAC_GEOMETRY_HPP

#include "isac/montecarlo.hpp"
#include "isac/system_params.hpp"

#include <cstddef>
#include <vector>

#include <json.hpp>

namespace isac::geometry {

/// One PPP deployment seen from the typical point at the origin.
/// distances ascending (km), angles in [0, 2 pi), all within window_radius.
struct NetworkRealization {
    std::vector<double> distances;
    std::vector<double> angles;
    double window_radius = 0.0;

    std::size_t size() const { return distances.size(); }
};

enum class DistanceLaw {
    exact,       ///< Gamma(n + 1/2) / (sqrt(lambda pi) Gamma(n))
    approximate, ///< sqrt(n / (lambda pi))
};

/// Window radius R with lambda pi R^2 = max(min_mean_points, 20, 4 k_needed).
double window_radius(double lambda, std::size_t k_needed, double min_mean_points = 20.0);

/// Homogeneous PPP of intensity `lambda` in the disk of radius window_radius(...).
/// Points are produced in distance order (lambda pi d^2 are unit-rate Poisson
/// arrivals), so no sort is needed. Resamples until at least k_needed points fall
/// in the window.
NetworkRealization sample_ppp(double lambda, std::size_t k_needed, Rng& rng,
                              double min_mean_points = 20.0);

/// E[d_n] of the n-th nearest point of a PPP with intensity lambda.
double expected_nth_distance(std::size_t n, double lambda, DistanceLaw law = DistanceLaw::exact);

/// Gamma(n + 1/2)^2 / Gamma(n)^2, the average association area of a BS in units
/// of 1/lambda_b when every user requests its n nearest BSs (n in the approximate law).
double association_area_factor(std::size_t n, DistanceLaw law = DistanceLaw::exact);

/// PDF of eta = d_1 / d_l: 2 (l - 1) x (1 - x^2)^(l - 2).
double distance_ratio_pdf(double eta, std::size_t l);

/// Mean aggregate path gain 2 pi lambda int_R^inf x^(1 - alpha) dx lost by truncating
/// the interference field at radius R.
double interference_tail_bound(double lambda, double alpha, double radius);

nlohmann::json to_json(const NetworkRealization& realization);

} // namespace isac::geometry

#endif // ISAC_GEOMETRY_HPP
