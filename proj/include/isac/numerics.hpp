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

#ifndef ISAC_NUMERICS_HPP
#define ISAC_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <span>

namespace isac::numerics {

inline constexpr double euler_gamma = 0.57721566490153286061;

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 1000;

    void validate() const;
};

using RealFunction = std::function<double(double)>;
using SeriesTerm = std::function<double(std::size_t)>;

/// Natural log of the Gamma function for x > 0.
double ln_gamma(double x);

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s).
double regularized_upper_gamma(double s, double x);

/// Non-regularized upper incomplete gamma, int_x^inf t^(s-1) e^-t dt.
/// Overflows to +inf once Gamma(s) does (s > ~171); use the regularized form there.
double upper_incomplete_gamma(double s, double x);

/// Non-regularized incomplete beta int_0^a t^(b-1) (1-t)^(c-1) dt. a > 1/2 is reflected
/// onto [0, 1/2], where a power series is summed for |c| <= 16. Other cases fall back
/// to adaptive quadrature in u = t^b.
double incomplete_beta(double a, double b, double c);

/// Adaptive Gauss-Kronrod (7/15) quadrature on a finite interval.
/// Throws ConvergenceError (with the best estimate) when max_subdivisions is hit.
double integrate(const RealFunction& f, double lo, double hi, const QuadratureSpec& spec = {});

/// int_0^inf f(z) dz via z = t / (1 - t) on (0, 1).
double integrate_semi_infinite(const RealFunction& f, const QuadratureSpec& spec = {});

/// Sum of term(first), term(first+1), ... stopped once three consecutive terms fall
/// below rel_cutoff times the running sum. Hard cap of 10^6 terms.
double sum_series(const SeriesTerm& term, std::size_t first, double rel_cutoff = 1e-12);

/// H_n = 1 + 1/2 + ... + 1/n (H_0 = 0).
double harmonic_number(std::size_t n);

/// Deterministic pairwise summation; result depends only on the order of `values`.
double pairwise_sum(std::span<const double> values);

} // namespace isac::numerics

#endif // ISAC_NUMERICS_HPP
