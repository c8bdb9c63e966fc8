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

#include "isac/communication.hpp"

#include "isac/errors.hpp"
#include "isac/sensing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace isac::comm {

using std::numbers::pi;

namespace {

void check_pgfl_args(const char* where, double x, double alpha, double eta)
{
    if (!(x >= 0.0) || !(alpha > 2.0) || !(eta > 0.0 && eta <= 1.0)) {
        throw DomainError(std::string(where) + ": requires x >= 0, alpha > 2, 0 < eta <= 1");
    }
}

// 1 - (1 + y)^-k
double one_minus_power(double y, double k)
{
    return -std::expm1(-k * std::log1p(y));
}

} // namespace

double h1(double x, double k, double alpha, double eta)
{
    check_pgfl_args("h1", x, alpha, eta);
    if (!(k >= 1.0)) {
        throw DomainError("h1: requires shape K >= 1");
    }
    if (x == 0.0) {
        return 0.0;
    }
    const double b = 1.0 - 2.0 / alpha;
    const double c = k + 2.0 / alpha;
    const double xe = x * std::pow(eta, alpha);
    const double inner = one_minus_power(xe, k) / (eta * eta);
    const double outer = -one_minus_power(x, k);
    const double betas =
        numerics::incomplete_beta(x / (1.0 + x), b, c) - numerics::incomplete_beta(xe / (1.0 + xe), b, c);
    return inner + outer + k * std::pow(x, 2.0 / alpha) * betas;
}

double h2(double x, double alpha, double eta)
{
    check_pgfl_args("h2", x, alpha, eta);
    if (x == 0.0) {
        return 0.0;
    }
    const double xe = x * std::pow(eta, alpha);
    const double beta_term =
        std::pow(x, 2.0 / alpha) * numerics::incomplete_beta(xe / (1.0 + xe), 1.0 - 2.0 / alpha, 1.0 + 2.0 / alpha);
    return beta_term - xe / ((1.0 + xe) * eta * eta);
}

double h1_by_quadrature(double x, double k, double alpha, double eta)
{
    check_pgfl_args("h1_by_quadrature", x, alpha, eta);
    const numerics::QuadratureSpec spec{1e-12, 1e-300, 4000};
    return 2.0 * numerics::integrate(
                     [&](double t) { return one_minus_power(x * std::pow(t, -alpha), k) * t; }, 1.0, 1.0 / eta,
                     spec);
}

double h2_by_quadrature(double x, double alpha, double eta)
{
    check_pgfl_args("h2_by_quadrature", x, alpha, eta);
    const numerics::QuadratureSpec spec{1e-12, 1e-300, 4000};
    // t = v^(-gamma) / eta with gamma = 1 / (alpha - 2) keeps the t^(1 - alpha) tail bounded on (0, 1].
    const double gamma = 1.0 / (alpha - 2.0);
    return 2.0 * numerics::integrate(
                     [&](double v) {
                         const double t = std::pow(v, -gamma) / eta;
                         const double y = x * std::pow(t, -alpha);
                         return y / (1.0 + y) * t * gamma * t / v;
                     },
                     0.0, 1.0, spec);
}

void LaplaceArgs::validate() const
{
    if (!(z >= 0.0) || !(r > 0.0) || !(eta > 0.0 && eta <= 1.0) || !(kappa_c >= 0.0 && kappa_c <= 1.0)) {
        throw DomainError("LaplaceArgs: requires z >= 0, r > 0, 0 < eta <= 1, 0 <= kappa_c <= 1");
    }
}

double laplace_u(const LaplaceArgs& args, const SystemParams& params)
{
    args.validate();
    const double exponent = pi * args.kappa_c * params.lambda_b * args.r * args.r *
                            h1(args.z * params.p_c, params.m_t - 1.0, params.alpha, args.eta);
    return std::exp(-exponent);
}

double laplace_i1(const LaplaceArgs& args, const SystemParams& params)
{
    args.validate();
    const double exponent = pi * (1.0 - args.kappa_c) * params.lambda_b * args.r * args.r *
                            h1(args.z, 1.0, params.alpha, args.eta);
    return std::exp(-exponent);
}

double laplace_i2(const LaplaceArgs& args, const SystemParams& params)
{
    args.validate();
    const double exponent = pi * params.lambda_b * args.r * args.r * h2(args.z, params.alpha, args.eta);
    return std::exp(-exponent);
}

double acceptance_comm(int psi, double mu_c, std::size_t l, geometry::DistanceLaw law)
{
    if (psi < 1 || !(mu_c >= 0.0) || l < 1) {
        throw DomainError("acceptance_comm: requires psi >= 1, mu_c >= 0, l >= 1");
    }
    const double load = mu_c * geometry::association_area_factor(l, law);
    const double psi_d = static_cast<double>(psi);
    const auto psi_u = static_cast<std::size_t>(psi);
    const double overload = sensing::poisson_weighted_tail(load, psi_u, [&](std::size_t n) {
        return n == psi_u ? 1.0 : (psi_d - 1.0) / (static_cast<double>(n) - 1.0);
    });
    return std::min(1.0, numerics::regularized_upper_gamma(psi_d, load) + overload);
}

double RateResult::bits() const
{
    return rate / std::numbers::ln2;
}

double rate_integrand(double z, double eta, double kappa_c, const SystemParams& params)
{
    const double alpha = params.alpha;
    const double shape = params.m_t - 1.0;
    const double p = params.p_c;
    if (z < kSmallZ) {
        const double slope = 2.0 * shape * p * (1.0 - std::pow(eta, alpha - 2.0)) / (alpha - 2.0);
        return shape * p + kappa_c * slope;
    }
    const double a = (1.0 - kappa_c) * h1(z, 1.0, alpha, eta) + h2(z, alpha, eta);
    const double coop = kappa_c > 0.0 && p > 0.0 ? kappa_c * h1(z * p, shape, alpha, eta) : 0.0;
    const double desired = std::exp(-shape * std::log1p(p * z));
    return (1.0 / (1.0 + a) - desired / (1.0 + a + coop)) / z;
}

RateResult rate_analytical(const SystemParams& params, std::size_t l, const RateOptions& options)
{
    params.validate();
    if (l < 1) {
        throw DomainError("rate_analytical: requires l >= 1");
    }
    const double kappa = options.kappa_c_override.value_or(acceptance_comm(params.psi, params.mu_c(), l));
    if (!(kappa >= 0.0 && kappa <= 1.0)) {
        throw DomainError("rate_analytical: kappa_c must lie in [0, 1]");
    }

    RateResult out;
    out.kappa_c = kappa;
    out.l = l;
    out.p_c = params.p_c;
    out.method = Method::analytical;
    if (params.p_c == 0.0) {
        return out;
    }

    numerics::RealFunction over_z;
    if (l == 1) {
        over_z = [&](double z) { return rate_integrand(z, 1.0, kappa, params); };
    } else {
        over_z = [&](double z) {
            return numerics::integrate(
                [&](double eta) {
                    return geometry::distance_ratio_pdf(eta, l) * rate_integrand(z, eta, kappa, params);
                },
                0.0, 1.0, options.inner);
        };
    }
    out.rate = std::max(0.0, numerics::integrate_semi_infinite(over_z, options.outer));
    return out;
}

RateResult rate_monte_carlo(const SystemParams& params, std::size_t l, std::size_t n_real, std::uint64_t seed,
                            const RateMcOptions& options)
{
    params.validate();
    if (l < 1 || n_real < 1) {
        throw DomainError("rate_monte_carlo: requires l >= 1 and n_real >= 1");
    }
    const double kappa = options.kappa_c_override.value_or(acceptance_comm(params.psi, params.mu_c(), l));
    if (!(kappa >= 0.0 && kappa <= 1.0)) {
        throw DomainError("rate_monte_carlo: kappa_c must lie in [0, 1]");
    }
    const double lambda = params.lambda_b;
    const double alpha = params.alpha;
    const double shape = params.m_t - 1.0;
    const double radius = geometry::window_radius(lambda, l + 1, options.window_mean_points);
    const double horizon = lambda * pi * radius * radius;

    const auto samples = mc::map_realizations<double>(
        n_real, seed,
        [&](Rng& rng, std::size_t) {
            std::exponential_distribution<double> gap(1.0);
            std::exponential_distribution<double> fading(1.0);
            std::gamma_distribution<double> desired(shape, 1.0);
            std::bernoulli_distribution accepts(kappa);
            for (;;) {
                double signal = 0.0;
                double interference = 0.0;
                std::size_t index = 0;
                for (double arrival = gap(rng); arrival <= horizon; arrival += gap(rng)) {
                    ++index;
                    // lambda pi d^2 = arrival, so d^-alpha = (arrival / (lambda pi))^(-alpha / 2)
                    const double path = std::pow(arrival / (lambda * pi), -0.5 * alpha);
                    if (index == 1 || (index <= l && accepts(rng))) {
                        signal += params.p_c * desired(rng) * path;
                    } else {
                        interference += fading(rng) * path;
                    }
                }
                if (index > l) {
                    return std::log1p(signal / interference);
                }
            }
        },
        options.execution);

    const EstimateWithCI estimate = mc::summarize(samples);
    RateResult out;
    out.rate = estimate.mean;
    out.kappa_c = kappa;
    out.l = l;
    out.p_c = params.p_c;
    out.method = Method::monte_carlo;
    out.half_width_95 = estimate.half_width_95;
    out.n_samples = estimate.n_samples;
    out.interference_tail_bound = geometry::interference_tail_bound(lambda, alpha, radius);
    return out;
}

double hamdi_log_moment(const numerics::RealFunction& laplace_num, const numerics::RealFunction& laplace_den,
                        const numerics::QuadratureSpec& spec)
{
    return numerics::integrate_semi_infinite(
        [&](double z) {
            const double at = std::max(z, kSmallZ);
            return (1.0 - laplace_num(at)) * laplace_den(at) / at;
        },
        spec);
}

LaplaceMcResult laplace_monte_carlo(const SystemParams& params, double r, double eta, double kappa_c,
                                    std::span<const double> zs, std::size_t n_draws, std::uint64_t seed,
                                    double tail_mean_points, mc::Execution execution)
{
    params.validate();
    LaplaceArgs{0.0, r, eta, kappa_c}.validate();
    if (n_draws < 1 || !(tail_mean_points > 0.0)) {
        throw DomainError("laplace_monte_carlo: requires n_draws >= 1 and tail_mean_points > 0");
    }
    const double lambda = params.lambda_b;
    const double alpha = params.alpha;
    const double edge = r / eta;
    const double annulus_area = pi * (edge * edge - r * r);
    const double edge_arrival = lambda * pi * edge * edge;
    const double far_arrival = edge_arrival + tail_mean_points;
    const double far_radius = std::sqrt(far_arrival / (lambda * pi));
    const double tail_mean = std::pow(r, alpha) * geometry::interference_tail_bound(lambda, alpha, far_radius);

    using Draw = std::array<double, 3>;
    const auto draws = mc::map_realizations<Draw>(
        n_draws, seed,
        [&](Rng& rng, std::size_t) {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            std::exponential_distribution<double> fading(1.0);
            std::gamma_distribution<double> desired(params.m_t - 1.0, params.p_c > 0.0 ? params.p_c : 1.0);
            auto annulus_gain = [&](double gain) {
                return std::pow((r * r + unit(rng) * (edge * edge - r * r)) / (r * r), -0.5 * alpha) * gain;
            };

            Draw out{0.0, 0.0, 0.0};
            std::poisson_distribution<long> coop(kappa_c * lambda * annulus_area);
            for (long i = coop(rng); i > 0; --i) {
                const double g = params.p_c > 0.0 ? desired(rng) : 0.0;
                out[0] += annulus_gain(g);
            }
            std::poisson_distribution<long> decline((1.0 - kappa_c) * lambda * annulus_area);
            for (long i = decline(rng); i > 0; --i) {
                out[1] += annulus_gain(fading(rng));
            }
            std::exponential_distribution<double> gap(1.0);
            for (double arrival = edge_arrival + gap(rng); arrival <= far_arrival; arrival += gap(rng)) {
                const double x_sq = arrival / (lambda * pi);
                out[2] += fading(rng) * std::pow(x_sq / (r * r), -0.5 * alpha);
            }
            out[2] += tail_mean;
            return out;
        },
        execution);

    LaplaceMcResult result;
    std::vector<double> values(draws.size());
    for (std::size_t which = 0; which < 3; ++which) {
        auto& target = which == 0 ? result.u : (which == 1 ? result.i1 : result.i2);
        for (const double z : zs) {
            for (std::size_t i = 0; i < draws.size(); ++i) {
                values[i] = std::exp(-z * draws[i][which]);
            }
            target.push_back(mc::summarize(values));
        }
    }
    return result;
}

} // namespace isac::comm
