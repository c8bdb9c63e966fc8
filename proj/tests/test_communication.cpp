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
#include "isac/sensing.hpp"
#include "isac/errors.hpp"

#include <gtest/gtest.h>

#include <boost/math/distributions/poisson.hpp>
#include <boost/math/special_functions/expint.hpp>

#include <array>
#include <cmath>
#include <numbers>

namespace {

using namespace isac;
using namespace isac::comm;
using std::numbers::pi;

TEST(Pgfl, ClosedFormsMatchQuadrature)
{
    for (const double alpha : {2.5, 3.0, 4.0, 6.0}) {
        for (const double eta : {0.05, 0.3, 0.75, 1.0}) {
            for (const double x : {1e-4, 0.2, 1.0, 7.0, 300.0}) {
                for (const double k : {1.0, 2.0, 5.0}) {
                    const double oracle = h1_by_quadrature(x, k, alpha, eta);
                    EXPECT_NEAR(h1(x, k, alpha, eta), oracle, 1e-8 * std::max(1.0, oracle))
                        << "h1 x=" << x << " k=" << k << " alpha=" << alpha << " eta=" << eta;
                }
                const double oracle = h2_by_quadrature(x, alpha, eta);
                EXPECT_NEAR(h2(x, alpha, eta), oracle, 1e-8 * std::max(1.0, oracle))
                    << "h2 x=" << x << " alpha=" << alpha << " eta=" << eta;
            }
        }
    }
}

TEST(Pgfl, ZeroAtOriginAndEmptyAnnulus)
{
    EXPECT_EQ(h1(0.0, 3.0, 4.0, 0.5), 0.0);
    EXPECT_EQ(h2(0.0, 4.0, 0.5), 0.0);
    EXPECT_NEAR(h1(2.0, 3.0, 4.0, 1.0), 0.0, 1e-13);
}

TEST(Pgfl, IncreasingInArgument)
{
    double p1 = 0.0;
    double p2 = 0.0;
    for (double x = 0.01; x < 1e4; x *= 1.5) {
        const double a = h1(x, 3.0, 4.0, 0.4);
        const double b = h2(x, 4.0, 0.4);
        EXPECT_GT(a, p1);
        EXPECT_GT(b, p2);
        p1 = a;
        p2 = b;
    }
}

TEST(Pgfl, H1SaturatesAtAnnulusArea)
{
    // 1 - (1 + y)^-K -> 1 on the whole annulus.
    EXPECT_NEAR(h1(1e12, 2.0, 4.0, 0.5), 4.0 - 1.0, 1e-4);
}

TEST(Pgfl, H2GrowsAsSquareRootForAlphaFour)
{
    // B(1/2, 3/2) = pi / 2
    const double x = 1e10;
    EXPECT_NEAR(h2(x, 4.0, 1.0) / std::sqrt(x), pi / 2.0, 1e-4);
}

TEST(Pgfl, RejectsBadArguments)
{
    EXPECT_THROW(h1(1.0, 0.5, 4.0, 0.5), DomainError);
    EXPECT_THROW(h1(-1.0, 1.0, 4.0, 0.5), DomainError);
    EXPECT_THROW(h2(1.0, 2.0, 0.5), DomainError);
    EXPECT_THROW(h2(1.0, 4.0, 0.0), DomainError);
}

TEST(Laplace, Limits)
{
    SystemParams params;
    params.p_c = 0.5;
    EXPECT_EQ(laplace_u({0.0, 0.5, 0.5, 0.7}, params), 1.0);
    EXPECT_EQ(laplace_i1({0.0, 0.5, 0.5, 0.7}, params), 1.0);
    EXPECT_EQ(laplace_i2({0.0, 0.5, 0.5, 0.7}, params), 1.0);
    EXPECT_EQ(laplace_u({3.0, 0.5, 0.5, 0.0}, params), 1.0);
    EXPECT_EQ(laplace_i1({3.0, 0.5, 0.5, 1.0}, params), 1.0);
    EXPECT_THROW(laplace_u({1.0, 0.0, 0.5, 0.5}, params), DomainError);
    EXPECT_THROW(laplace_u({1.0, 0.5, 0.5, 1.5}, params), DomainError);
}

TEST(Laplace, DecreasingInZ)
{
    const SystemParams params;
    double prev = 1.0;
    for (double z = 0.1; z < 100.0; z *= 2.0) {
        const double v = laplace_u({z, 0.5, 0.3, 0.8}, params) * laplace_i1({z, 0.5, 0.3, 0.8}, params) *
                         laplace_i2({z, 0.5, 0.3, 0.8}, params);
        EXPECT_LT(v, prev);
        prev = v;
    }
}

TEST(Laplace, MatchesSimulatedPoissonField)
{
    SystemParams params;
    params.p_c = 0.6;
    const std::array<double, 2> zs{0.3, 2.0};
    const LaplaceMcResult sim = laplace_monte_carlo(params, 0.5, 0.4, 0.7, zs, 40000, 77);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        const LaplaceArgs args{zs[i], 0.5, 0.4, 0.7};
        EXPECT_NEAR(sim.u[i].mean, laplace_u(args, params), 4.0 * sim.u[i].standard_error() + 1e-6);
        EXPECT_NEAR(sim.i1[i].mean, laplace_i1(args, params), 4.0 * sim.i1[i].standard_error() + 1e-6);
        EXPECT_NEAR(sim.i2[i].mean, laplace_i2(args, params), 4.0 * sim.i2[i].standard_error() + 1e-6);
    }
}

double kappa_c_oracle(int psi, double load)
{
    if (load == 0.0) {
        return 1.0;
    }
    const boost::math::poisson_distribution<double> dist(load);
    double total = 0.0;
    const auto cap = static_cast<int>(load + 40.0 * std::sqrt(load) + 200.0);
    for (int n = 0; n <= cap; ++n) {
        double w = 1.0;
        if (n > psi) {
            w = (psi - 1.0) / (n - 1.0);
        }
        total += w * boost::math::pdf(dist, n);
    }
    return total;
}

TEST(AcceptanceComm, MatchesDirectSum)
{
    for (const int psi : {1, 2, 5, 15}) {
        for (const double mu : {0.0, 0.5, 1.0, 2.0, 8.0}) {
            for (const std::size_t l : {1u, 2u, 4u, 10u}) {
                const double load = mu * geometry::association_area_factor(l);
                EXPECT_NEAR(acceptance_comm(psi, mu, l), std::min(1.0, kappa_c_oracle(psi, load)), 1e-12)
                    << psi << " " << mu << " " << l;
            }
        }
    }
}

TEST(AcceptanceComm, LimitsAndSimulation)
{
    EXPECT_NEAR(acceptance_comm(5, 1e-9, 3), 1.0, 1e-12);
    EXPECT_NEAR(acceptance_comm(400, 1.0, 3), 1.0, 1e-12);
    const double load = 2.0 * geometry::association_area_factor(5);
    const EstimateWithCI sim =
        sensing::load_acceptance_monte_carlo(5, load, sensing::LoadRule::communication, 100000, 31);
    EXPECT_NEAR(sim.mean, acceptance_comm(5, 2.0, 5), 4.0 * sim.standard_error() + 1e-4);
    EXPECT_THROW(acceptance_comm(0, 1.0, 1), DomainError);
}

TEST(Hamdi, ExponentialOverConstant)
{
    // E[log(1 + X)], X ~ Exp(1): e E1(1)
    const double value = hamdi_log_moment([](double z) { return 1.0 / (1.0 + z); },
                                          [](double z) { return std::exp(-z); });
    EXPECT_NEAR(value, std::exp(1.0) * boost::math::expint(1, 1.0), 1e-7);
}

TEST(Hamdi, ZeroNumerator)
{
    EXPECT_EQ(hamdi_log_moment([](double) { return 1.0; }, [](double z) { return std::exp(-z); }), 0.0);
}

TEST(Hamdi, ExponentialRatio)
{
    // E[log(1 + X / Y)] = int_0^inf (1 + z)^-2 dz = 1 for X, Y ~ Exp(1)
    const auto exp_laplace = [](double z) { return 1.0 / (1.0 + z); };
    EXPECT_NEAR(hamdi_log_moment(exp_laplace, exp_laplace), 1.0, 1e-8);

    const auto samples = mc::map_realizations<double>(1000000, 41, [](Rng& rng, std::size_t) {
        std::exponential_distribution<double> e(1.0);
        const double x = e(rng);
        return std::log1p(x / e(rng));
    });
    const EstimateWithCI sim = mc::summarize(samples);
    EXPECT_NEAR(sim.mean, 1.0, 4.0 * sim.standard_error());
}

TEST(Rate, IntegrandNonNegativeAndContinuousAtSmallZ)
{
    SystemParams params;
    params.p_c = 0.6;
    for (const double eta : {0.1, 0.5, 0.9, 1.0}) {
        for (const double kappa : {0.0, 0.5, 1.0}) {
            for (double z = 1e-5; z < 1e5; z *= 3.0) {
                EXPECT_GE(rate_integrand(z, eta, kappa, params), -1e-12);
            }
            const double below = rate_integrand(0.999 * kSmallZ, eta, kappa, params);
            const double above = rate_integrand(1.001 * kSmallZ, eta, kappa, params);
            EXPECT_NEAR(below, above, 1e-4 * std::max(1.0, below)) << eta << " " << kappa;
        }
    }
}

TEST(Rate, ZeroCommunicationPower)
{
    SystemParams params;
    params.p_c = 0.0;
    EXPECT_EQ(rate_analytical(params, 3).rate, 0.0);
}

TEST(Rate, SingleBsEqualsHamdiForm)
{
    SystemParams params;
    params.p_c = 0.7;
    const double shape = params.m_t - 1.0;
    const double hamdi = hamdi_log_moment([&](double z) { return std::pow(1.0 + params.p_c * z, -shape); },
                                          [&](double z) { return 1.0 / (1.0 + h2(z, params.alpha, 1.0)); },
                                          {1e-9, 1e-12, 2000});
    const RateResult r = rate_analytical(params, 1);
    EXPECT_NEAR(r.rate, hamdi, 1e-6 * hamdi);
    EXPECT_NEAR(r.bits(), r.rate / std::log(2.0), 1e-15);
}

TEST(Rate, FullCooperationHelps)
{
    SystemParams params;
    params.p_c = 0.6;
    RateOptions options;
    options.kappa_c_override = 1.0;
    const double one = rate_analytical(params, 1, options).rate;
    const double two = rate_analytical(params, 2, options).rate;
    const double three = rate_analytical(params, 3, options).rate;
    EXPECT_GT(two, one);
    EXPECT_GT(three, two);
}

TEST(Rate, IncreasingInPower)
{
    SystemParams params;
    double previous = 0.0;
    for (const double p : {0.2, 0.5, 0.8, 1.0}) {
        params.p_c = p;
        const double rate = rate_analytical(params, 2).rate;
        EXPECT_GT(rate, previous);
        previous = rate;
    }
}

TEST(RateMonteCarlo, SingleBsAgreesWithAnalytical)
{
    SystemParams params;
    params.p_c = 0.6;
    const RateResult sim = rate_monte_carlo(params, 1, 40000, 51);
    const RateResult exact = rate_analytical(params, 1);
    EXPECT_NEAR(sim.rate, exact.rate, 4.0 * sim.half_width_95 / 1.96 + 0.005 * exact.rate);
    EXPECT_EQ(sim.n_samples, 40000u);
}

TEST(RateMonteCarlo, WindowTruncationIsSmall)
{
    SystemParams params;
    params.p_c = 0.6;
    RateMcOptions small;
    small.window_mean_points = 1000.0;
    RateMcOptions large = small;
    large.window_mean_points = 4000.0;
    const RateResult a = rate_monte_carlo(params, 2, 5000, 52, small);
    const RateResult b = rate_monte_carlo(params, 2, 5000, 52, large);
    EXPECT_GT(a.rate, b.rate);
    EXPECT_LT((a.rate - b.rate) / b.rate, 0.005);
    EXPECT_GT(a.interference_tail_bound, b.interference_tail_bound);
}

TEST(RateMonteCarlo, DeterministicAcrossThreads)
{
    SystemParams params;
    params.p_c = 0.5;
    RateMcOptions serial;
    serial.execution = mc::Execution::serial;
    const RateResult a = rate_monte_carlo(params, 3, 2000, 53, serial);
    mc::ThreadOverride guard(4);
    const RateResult b = rate_monte_carlo(params, 3, 2000, 53);
    EXPECT_EQ(a.rate, b.rate);
    EXPECT_EQ(a.half_width_95, b.half_width_95);
    EXPECT_THROW(rate_monte_carlo(params, 0, 10, 1), DomainError);
}

} // namespace
