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

#include "isac/numerics.hpp"

#include "isac/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace isac::numerics {

namespace {

// Gauss-Kronrod 15-point abscissae and weights (QUADPACK qk15). Odd indices are
// the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod_15(const RealFunction& f, double lo, double hi)
{
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const double f_center = f(center);
    double kronrod = f_center * kWgk[7];
    double gauss = f_center * kWg[3];
    double abs_kronrod = std::abs(kronrod);

    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const double sum = f1[j] + f2[j];
        kronrod += kWgk[j] * sum;
        abs_kronrod += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * sum;
        }
    }

    const double mean = 0.5 * kronrod;
    double asc = kWgk[7] * std::abs(f_center - mean);
    for (std::size_t j = 0; j < 7; ++j) {
        asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
    }

    const double value = kronrod * half;
    asc *= std::abs(half);
    double error = std::abs((kronrod - gauss) * half);
    if (asc != 0.0 && error != 0.0) {
        error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
    }
    const double round_off = 50.0 * std::numeric_limits<double>::epsilon() * abs_kronrod * std::abs(half);
    error = std::max(error, round_off);

    return {lo, hi, value, error};
}

double ln_gamma_unchecked(double x)
{
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

} // namespace

void QuadratureSpec::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1) {
        throw DomainError("QuadratureSpec requires rel_tol > 0, abs_tol > 0, max_subdivisions >= 1");
    }
}

double ln_gamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("ln_gamma: x must be a finite positive number, got " + std::to_string(x));
    }
    return ln_gamma_unchecked(x);
}

double regularized_upper_gamma(double s, double x)
{
    if (!(s > 0.0) || !(x >= 0.0) || !std::isfinite(s)) {
        throw DomainError("incomplete gamma: requires s > 0 and x >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (std::isinf(x)) {
        return 0.0;
    }

    constexpr int max_iter = 100000;
    constexpr double eps = 1e-16;
    const double log_prefactor = s * std::log(x) - x - ln_gamma_unchecked(s);

    if (x < s + 1.0) {
        // Lower series P(s, x) = x^s e^-x / Gamma(s+1) * sum x^n / ((s+1)...(s+n)).
        double term = 1.0 / s;
        double sum = term;
        for (int n = 1; n < max_iter; ++n) {
            term *= x / (s + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * eps) {
                return 1.0 - std::exp(log_prefactor) * sum;
            }
        }
        throw ConvergenceError("regularized_upper_gamma: series did not converge",
                               1.0 - std::exp(log_prefactor) * sum);
    }

    // Continued fraction for Q(s, x), modified Lentz.
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < max_iter; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps) {
            return std::exp(log_prefactor) * h;
        }
    }
    throw ConvergenceError("regularized_upper_gamma: continued fraction did not converge",
                           std::exp(log_prefactor) * h);
}

double upper_incomplete_gamma(double s, double x)
{
    const double q = regularized_upper_gamma(s, x);
    return q * std::exp(ln_gamma_unchecked(s));
}

double incomplete_beta(double a, double b, double c)
{
    if (!(a >= 0.0 && a <= 1.0)) {
        throw DomainError("incomplete_beta: a must lie in [0, 1]");
    }
    if (!(b > 0.0)) {
        throw DomainError("incomplete_beta: b must be positive");
    }
    if (a == 1.0 && !(c > 0.0)) {
        throw DomainError("incomplete_beta: c must be positive when a = 1");
    }
    if (a == 0.0) {
        return 0.0;
    }

    if (a > 0.5 && c > 0.0) {
        // Reflection keeps the evaluation on the short side, away from t = 1.
        const double complete = std::exp(ln_gamma(b) + ln_gamma(c) - ln_gamma(b + c));
        return complete - incomplete_beta(1.0 - a, c, b);
    }

    if (a <= 0.5 && std::abs(c) <= 16.0) {
        // a^b sum_n (1-c)_n / n! a^n / (b + n); ratio <= a, so ~50 terms reach 1e-16.
        double coeff = 1.0;
        double power = 1.0;
        double sum = 1.0 / b;
        for (int n = 1; n < 200; ++n) {
            coeff *= (n - c) / n;
            power *= a;
            const double term = coeff * power / (b + n);
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum)) {
                break;
            }
        }
        return std::pow(a, b) * sum;
    }

    // u = t^b turns t^(b-1) dt into du / b.
    const QuadratureSpec spec{1e-13, 1e-300, 2000};
    const double inv_b = 1.0 / b;
    return inv_b * integrate(
        [&](double u) {
            const double t = std::pow(u, inv_b);
            return std::pow(1.0 - t, c - 1.0);
        },
        0.0, std::pow(a, b), spec);
}

double integrate(const RealFunction& f, double lo, double hi, const QuadratureSpec& spec)
{
    spec.validate();
    if (lo == hi) {
        return 0.0;
    }
    if (hi < lo) {
        return -integrate(f, hi, lo, spec);
    }

    std::priority_queue<Panel> panels;
    Panel first = gauss_kronrod_15(f, lo, hi);
    double total = first.value;
    double error = first.error;
    panels.push(first);

    int subdivisions = 0;
    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (subdivisions >= spec.max_subdivisions) {
            throw ConvergenceError("integrate: tolerance not reached within " +
                                       std::to_string(spec.max_subdivisions) + " subdivisions",
                                   total);
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            throw ConvergenceError("integrate: interval cannot be bisected further", total);
        }
        const Panel left = gauss_kronrod_15(f, worst.lo, mid);
        const Panel right = gauss_kronrod_15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++subdivisions;

        // Running sums drift; refresh them from the panels now and then.
        if (subdivisions % 64 == 0) {
            std::vector<Panel> all;
            all.reserve(panels.size());
            total = 0.0;
            error = 0.0;
            while (!panels.empty()) {
                all.push_back(panels.top());
                panels.pop();
            }
            for (const Panel& p : all) {
                total += p.value;
                error += p.error;
                panels.push(p);
            }
        }
    }
    if (!std::isfinite(total)) {
        throw ConvergenceError("integrate: non-finite result", total);
    }
    return total;
}

double integrate_semi_infinite(const RealFunction& f, const QuadratureSpec& spec)
{
    return integrate(
        [&](double t) {
            const double one_minus = 1.0 - t;
            const double z = t / one_minus;
            if (!std::isfinite(z)) {
                return 0.0;
            }
            const double value = f(z);
            if (value == 0.0) {
                return 0.0;
            }
            return value / (one_minus * one_minus);
        },
        0.0, 1.0, spec);
}

double sum_series(const SeriesTerm& term, std::size_t first, double rel_cutoff)
{
    if (!(rel_cutoff > 0.0)) {
        throw DomainError("sum_series: rel_cutoff must be positive");
    }
    constexpr std::size_t hard_cap = 1000000;
    double sum = 0.0;
    int small_in_a_row = 0;
    for (std::size_t k = 0; k < hard_cap; ++k) {
        const double t = term(first + k);
        sum += t;
        if (std::abs(t) <= rel_cutoff * std::abs(sum)) {
            if (++small_in_a_row == 3) {
                return sum;
            }
        } else {
            small_in_a_row = 0;
        }
    }
    throw ConvergenceError("sum_series: no decay detected within 10^6 terms", sum);
}

double harmonic_number(std::size_t n)
{
    double sum = 0.0;
    for (std::size_t k = n; k >= 1; --k) {
        sum += 1.0 / static_cast<double>(k);
    }
    return sum;
}

double pairwise_sum(std::span<const double> values)
{
    constexpr std::size_t block = 32;
    if (values.size() <= block) {
        double sum = 0.0;
        for (double v : values) {
            sum += v;
        }
        return sum;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

} // namespace isac::numerics
