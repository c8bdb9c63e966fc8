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

#include "isac/errors.hpp"
#include "isac/numerics.hpp"

#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace {

using namespace isac;
using namespace isac::numerics;
using Big = boost::multiprecision::cpp_dec_float_50;

TEST(LnGamma, TrivialValues)
{
    EXPECT_NEAR(ln_gamma(1.0), 0.0, 1e-15);
    EXPECT_NEAR(ln_gamma(0.5), 0.5723649429247001, 1e-14);
}

TEST(LnGamma, MatchesFiftyDigitOracle)
{
    const Big oracle = boost::math::lgamma(Big(7.5));
    EXPECT_NEAR(ln_gamma(7.5), oracle.convert_to<double>(), 1e-12 * std::abs(oracle.convert_to<double>()));
}

TEST(LnGamma, RelativeAccuracyOverRange)
{
    for (const double x : {0.5, 0.75, 3.3, 17.0, 123.4, 4.5e3, 9.9e4, 1e6}) {
        const double oracle = boost::math::lgamma(Big(x)).convert_to<double>();
        EXPECT_NEAR(ln_gamma(x), oracle, 1e-12 * std::max(1.0, std::abs(oracle))) << "x=" << x;
    }
}

TEST(LnGamma, Recurrence)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.5, 100.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        const double lhs = ln_gamma(x + 1.0);
        EXPECT_NEAR(lhs, ln_gamma(x) + std::log(x), 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST(LnGamma, RejectsNonPositive)
{
    EXPECT_THROW(ln_gamma(0.0), DomainError);
    EXPECT_THROW(ln_gamma(-2.5), DomainError);
}

TEST(UpperIncompleteGamma, AtZeroEqualsCompleteGamma)
{
    EXPECT_DOUBLE_EQ(upper_incomplete_gamma(1.0, 0.0), 1.0);
    double factorial = 1.0;
    for (int s = 1; s <= 20; ++s) {
        EXPECT_NEAR(upper_incomplete_gamma(s, 0.0), factorial, 1e-12 * factorial) << "s=" << s;
        factorial *= s;
    }
}

TEST(UpperIncompleteGamma, MatchesQuadratureOfDefinition)
{
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double oracle = integrator.integrate([](double t) { return std::exp(14.0 * std::log(t) - t); }, 10.0,
                                               std::numeric_limits<double>::infinity());
    EXPECT_NEAR(upper_incomplete_gamma(15.0, 10.0), oracle, 1e-10 * oracle);
}

TEST(UpperIncompleteGamma, MatchesBoostRegularized)
{
    for (const double s : {0.3, 1.0, 2.5, 15.0, 16.0, 60.0}) {
        for (const double x : {0.0, 0.01, 1.0, 5.0, 15.0, 40.0, 120.0}) {
            const double oracle = boost::math::gamma_q(s, x);
            EXPECT_NEAR(regularized_upper_gamma(s, x), oracle, 1e-12 + 1e-11 * oracle) << s << " " << x;
        }
    }
}

TEST(UpperIncompleteGamma, RejectsInvalid)
{
    EXPECT_THROW(upper_incomplete_gamma(0.0, 1.0), DomainError);
    EXPECT_THROW(upper_incomplete_gamma(1.0, -1.0), DomainError);
}

TEST(IncompleteBeta, TrivialValues)
{
    EXPECT_EQ(incomplete_beta(0.0, 0.5, 1.5), 0.0);
    EXPECT_NEAR(incomplete_beta(1.0, 1.0, 1.0), 1.0, 1e-14);
}

TEST(IncompleteBeta, MatchesQuadratureOracle)
{
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double oracle =
        integrator.integrate([](double t) { return std::pow(t, -0.5) * std::pow(1.0 - t, 0.5); }, 0.0, 0.5);
    EXPECT_NEAR(incomplete_beta(0.5, 0.5, 1.5), oracle, 1e-12 * oracle);
}

TEST(IncompleteBeta, MatchesBoostOverGrid)
{
    for (const double a : {1e-9, 1e-4, 0.1, 0.37, 0.5, 0.63, 0.9, 0.999, 1.0 - 1e-9, 1.0}) {
        for (const double b : {0.2, 0.5, 1.0 / 3.0, 0.6, 1.0, 2.5}) {
            for (const double c : {0.5, 1.0, 1.4, 1.5, 3.5, 12.0, 30.0}) {
                const double oracle = boost::math::beta(b, c, a);
                EXPECT_NEAR(incomplete_beta(a, b, c), oracle, 1e-11 * oracle + 1e-300)
                    << "a=" << a << " b=" << b << " c=" << c;
            }
        }
    }
}

TEST(IncompleteBeta, MonotoneInUpperLimit)
{
    double previous = 0.0;
    for (int i = 1; i <= 200; ++i) {
        const double value = incomplete_beta(i / 200.0, 0.5, 1.5);
        EXPECT_GE(value, previous);
        previous = value;
    }
}

TEST(IncompleteBeta, RejectsOutOfRange)
{
    EXPECT_THROW(incomplete_beta(-0.1, 0.5, 1.5), DomainError);
    EXPECT_THROW(incomplete_beta(1.1, 0.5, 1.5), DomainError);
}

TEST(Integrate, SemiInfiniteKnownIntegrals)
{
    EXPECT_NEAR(integrate_semi_infinite([](double z) { return std::exp(-z); }), 1.0, 1e-10);
    EXPECT_NEAR(integrate_semi_infinite([](double z) { return 1.0 / ((1.0 + z) * (1.0 + z)); }), 1.0, 1e-10);
    EXPECT_NEAR(integrate_semi_infinite([](double z) { return z * std::exp(-z * z); }), 0.5, 1e-10);
}

TEST(Integrate, SemiInfiniteMoments)
{
    double factorial = 1.0;
    for (int k = 0; k <= 3; ++k) {
        const double value = integrate_semi_infinite([k](double z) { return std::pow(z, k) * std::exp(-z); });
        EXPECT_NEAR(value, factorial, 1e-8 * factorial) << "k=" << k;
        factorial *= k + 1;
    }
}

TEST(Integrate, FiniteInterval)
{
    EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi), 2.0, 1e-12);
    EXPECT_EQ(integrate([](double) { return 1.0; }, 3.0, 3.0), 0.0);
    EXPECT_NEAR(integrate([](double x) { return x; }, 1.0, 0.0), -0.5, 1e-14);
}

TEST(Integrate, NonConvergenceCarriesEstimate)
{
    const QuadratureSpec spec{1e-14, 1e-300, 3};
    try {
        integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_GT(e.best_estimate(), 1.0);
        EXPECT_LT(e.best_estimate(), 2.0);
    }
}

TEST(Integrate, SpecValidation)
{
    EXPECT_THROW((QuadratureSpec{0.0, 1e-12, 10}.validate()), DomainError);
    EXPECT_THROW((QuadratureSpec{1e-8, -1.0, 10}.validate()), DomainError);
    EXPECT_THROW((QuadratureSpec{1e-8, 1e-12, 0}.validate()), DomainError);
    EXPECT_NO_THROW(QuadratureSpec{}.validate());
}

TEST(SumSeries, Geometric)
{
    EXPECT_NEAR(sum_series([](std::size_t n) { return std::pow(2.0, -static_cast<double>(n)); }, 1), 1.0, 1e-12);
}

TEST(SumSeries, InverseFactorialTailAgainstHighPrecision)
{
    // sum_{n >= 2} e^-1 / (n n!)
    Big oracle = 0;
    Big factorial = 1;
    const Big e_inv = boost::multiprecision::exp(Big(-1));
    for (int n = 1; n < 60; ++n) {
        factorial *= n;
        if (n >= 2) {
            oracle += e_inv / (Big(n) * factorial);
        }
    }
    const double value = sum_series(
        [](std::size_t n) {
            return std::exp(-1.0 - std::log(static_cast<double>(n)) - std::lgamma(static_cast<double>(n) + 1.0));
        },
        2);
    EXPECT_NEAR(value, oracle.convert_to<double>(), 1e-13);
}

TEST(SumSeries, ZeroTerms)
{
    EXPECT_EQ(sum_series([](std::size_t) { return 0.0; }, 0), 0.0);
}

TEST(SumSeries, DivergentSeriesThrows)
{
    EXPECT_THROW(sum_series([](std::size_t) { return 1.0; }, 0), ConvergenceError);
}

TEST(Harmonic, KnownValues)
{
    EXPECT_EQ(harmonic_number(0), 0.0);
    EXPECT_DOUBLE_EQ(harmonic_number(4), 25.0 / 12.0);
    EXPECT_NEAR(harmonic_number(1000000), std::log(1e6) + euler_gamma + 0.5e-6, 1e-12);
}

TEST(PairwiseSum, MatchesAndIsOrderDeterministic)
{
    std::vector<double> values(1001);
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = 1.0 / static_cast<double>(i + 1);
    }
    EXPECT_NEAR(pairwise_sum(values), harmonic_number(values.size()), 1e-13);
    EXPECT_EQ(pairwise_sum(values), pairwise_sum(values));
    EXPECT_EQ(pairwise_sum(std::vector<double>{}), 0.0);
}

} // namespace
