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

#include "isac/sensing.hpp"

#include "isac/errors.hpp"
#include "isac/numerics.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace isac::sensing {

using std::numbers::pi;

SensingGain SensingGain::normalized(double zeta_sq)
{
    if (!(zeta_sq > 0.0)) {
        throw DomainError("SensingGain: zeta_sq must be > 0");
    }
    return {zeta_sq};
}

SensingGain SensingGain::from_components(double p_s, double g_t, double g_r, double b_eff, double f_c,
                                         double sigma_rcs, double sigma_s_sq)
{
    const double zeta_sq =
        p_s * g_t * g_r * b_eff * b_eff * sigma_rcs / (8.0 * pi * f_c * f_c * sigma_s_sq);
    return normalized(zeta_sq);
}

SensingGain sensing_gain(const SystemParams& params)
{
    if (params.zeta_mode == ZetaMode::physical) {
        return SensingGain::from_components(params.p_s(), params.transmit_gain(), params.receive_gain(),
                                            params.b_eff, params.f_c, params.sigma_rcs,
                                            params.sigma_s_sq);
    }
    return SensingGain::normalized(params.p_s() * params.zeta_sq_unit);
}

FisherInfo fim(const geometry::NetworkRealization& realization, std::size_t n, const SensingGain& gain,
               double beta)
{
    if (n > realization.size()) {
        throw SizeError("fim: cluster size " + std::to_string(n) + " exceeds the " +
                        std::to_string(realization.size()) + " points of the realization");
    }
    std::vector<double> weight(n);
    std::vector<double> cos_t(n);
    std::vector<double> sin_t(n);
    for (std::size_t i = 0; i < n; ++i) {
        weight[i] = std::pow(realization.distances[i], -beta);
        cos_t[i] = std::cos(realization.angles[i]);
        sin_t[i] = std::sin(realization.angles[i]);
    }

    FisherInfo f;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double w = weight[i] * weight[j];
            const double a = cos_t[i] + cos_t[j];
            const double b = sin_t[i] + sin_t[j];
            f.xx += w * a * a;
            f.xy += w * a * b;
            f.yy += w * b * b;
        }
    }
    f.xx *= gain.zeta_sq;
    f.xy *= gain.zeta_sq;
    f.yy *= gain.zeta_sq;
    return f;
}

double crlb_from_fim(const FisherInfo& f)
{
    const double tr = f.trace();
    const double det = f.determinant();
    if (!(det > kSingularTol * 0.25 * tr * tr)) {
        return INFINITY;
    }
    return tr / det;
}

CrlbEstimate crlb_monte_carlo(const SystemParams& params, const SensingGain& gain, std::size_t n,
                              std::size_t n_real, std::uint64_t seed, mc::Execution execution)
{
    params.validate();
    if (n < 1 || n_real < 1) {
        throw DomainError("crlb_monte_carlo: requires n >= 1 and n_real >= 1");
    }

    struct Sample {
        double value;
        bool singular;
    };
    const auto samples = mc::map_realizations<Sample>(
        n_real, seed,
        [&](Rng& rng, std::size_t) {
            const auto deployment = geometry::sample_ppp(params.lambda_b, n, rng);
            const FisherInfo f = fim(deployment, n, gain, params.beta);
            const double det = f.determinant();
            const double tr = f.trace();
            const bool singular = !(det > kSingularTol * 0.25 * tr * tr);
            return Sample{det > 0.0 ? tr / det : INFINITY, singular};
        },
        execution);

    std::vector<double> values(samples.size());
    std::size_t singular = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        values[i] = samples[i].value;
        singular += samples[i].singular ? 1 : 0;
    }
    CrlbEstimate out;
    out.estimate = mc::summarize(values);
    out.singular_fraction = static_cast<double>(singular) / static_cast<double>(n_real);
    return out;
}

double crlb_mean_distance(const SystemParams& params, const SensingGain& gain, std::size_t n, PairSum pairs,
                  geometry::DistanceLaw law)
{
    if (n < 2) {
        throw DomainError("crlb_mean_distance: requires n >= 2");
    }
    double sum = 0.0;
    double diagonal = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double term = std::pow(geometry::expected_nth_distance(k, params.lambda_b, law), -params.beta);
        sum += term;
        diagonal += term * term;
    }
    double denominator = sum * sum;
    if (pairs == PairSum::off_diagonal) {
        denominator -= diagonal;
    }
    return 2.0 / (gain.zeta_sq * denominator);
}

double crlb_rank_power(const SystemParams& params, const SensingGain& gain, std::size_t n)
{
    if (n < 2) {
        throw DomainError("crlb_rank_power: requires n >= 2");
    }
    double sum = 0.0;
    for (std::size_t k = n; k >= 1; --k) {
        sum += std::pow(static_cast<double>(k), -0.5 * params.beta);
    }
    const double scale = std::pow(params.lambda_b * pi, params.beta);
    return 2.0 / (gain.zeta_sq * scale * sum * sum);
}

double CrlbAsymptote::scaled(double n) const
{
    const double ln_n = std::log(n);
    return ln2_constant / (ln_n * ln_n);
}

double CrlbAsymptote::refined(double n) const
{
    const double h = std::log(n) + numerics::euler_gamma + 0.5 / n;
    return ln2_constant / (h * h);
}

CrlbAsymptote crlb_asymptote(const SystemParams& params, const SensingGain& gain)
{
    if (params.beta != 2.0) {
        throw UnsupportedRegimeError("crlb_asymptote: the ln^2 N law holds for beta = 2 only");
    }
    const double base = 1.0 / (gain.zeta_sq * params.lambda_b * params.lambda_b * pi * pi);
    return {base, 2.0 * base};
}

namespace {

double poisson_log_pmf(double mean, std::size_t k)
{
    const double kd = static_cast<double>(k);
    if (mean == 0.0) {
        return k == 0 ? 0.0 : -INFINITY;
    }
    return kd * std::log(mean) - mean - numerics::ln_gamma(kd + 1.0);
}

} // namespace

double poisson_weighted_tail(double mean, std::size_t first, const std::function<double(std::size_t)>& weight)
{
    // Terms grow until the Poisson mode; the relative stopping rule of sum_series is
    // only meaningful past it.
    const auto mode = static_cast<std::size_t>(std::floor(mean));
    double head = 0.0;
    std::size_t k = first;
    for (; k <= mode; ++k) {
        head += weight(k) * std::exp(poisson_log_pmf(mean, k));
    }
    return head + numerics::sum_series(
                      [&](std::size_t j) { return weight(j) * std::exp(poisson_log_pmf(mean, j)); }, k);
}

double acceptance_sensing(int psi, double mu_s, std::size_t n, AcceptanceForm form,
                          geometry::DistanceLaw law)
{
    if (psi < 1 || !(mu_s >= 0.0) || n < 1) {
        throw DomainError("acceptance_sensing: requires psi >= 1, mu_s >= 0, n >= 1");
    }
    const double load = mu_s * geometry::association_area_factor(n, law);
    const double psi_d = static_cast<double>(psi);
    const auto psi_u = static_cast<std::size_t>(psi);

    const double overload = poisson_weighted_tail(
        load, psi_u + 1, [&](std::size_t k) { return psi_d / static_cast<double>(k); });

    switch (form) {
    case AcceptanceForm::poisson_sum:
        // Pr[n <= psi] = Q(psi + 1, load)
        return numerics::regularized_upper_gamma(psi_d + 1.0, load) + overload;
    case AcceptanceForm::q_psi:
        return numerics::regularized_upper_gamma(psi_d, load) + overload;
    case AcceptanceForm::q_psi_over_psi:
        return numerics::regularized_upper_gamma(psi_d, load) / psi_d + overload;
    }
    throw DomainError("acceptance_sensing: unknown form");
}

double crlb_with_acceptance(const SystemParams& params, const SensingGain& gain, std::size_t n,
                            CrlbaVariant variant, AcceptanceForm form)
{
    if (n < 2) {
        throw DomainError("crlb_with_acceptance: requires n >= 2");
    }
    const CrlbAsymptote asym = crlb_asymptote(params, gain);
    const double kappa = acceptance_sensing(params.psi, params.mu_s(), n, form);
    const double kappa_sq = kappa * kappa;
    if (variant == CrlbaVariant::consistent) {
        const double h = numerics::harmonic_number(n);
        return asym.closed_form_constant / (kappa_sq * h * h);
    }
    return asym.scaled(static_cast<double>(n)) / kappa_sq;
}

EstimateWithCI load_acceptance_monte_carlo(int psi, double mean_load, LoadRule rule, std::size_t n_draws,
                                           std::uint64_t seed, mc::Execution execution)
{
    if (psi < 1 || !(mean_load >= 0.0) || n_draws < 1) {
        throw DomainError("load_acceptance_monte_carlo: requires psi >= 1, mean_load >= 0, n_draws >= 1");
    }
    const auto psi_u = static_cast<std::size_t>(psi);
    const auto accepted = mc::map_realizations<double>(
        n_draws, seed,
        [&](Rng& rng, std::size_t) {
            // PPP count in the association area.
            std::poisson_distribution<long> count(mean_load);
            const auto requests = static_cast<std::size_t>(count(rng));
            if (requests <= psi_u) {
                return 1.0;
            }
            // Candidates the BS picks from, and how many it keeps. Index 0 is the
            // tagged request.
            std::size_t candidates = requests;
            std::size_t slots = psi_u;
            if (rule == LoadRule::communication) {
                candidates = requests - 1;
                slots = psi_u - 1;
            }
            std::vector<std::size_t> order(candidates);
            std::iota(order.begin(), order.end(), std::size_t{0});
            for (std::size_t s = 0; s < slots; ++s) {
                std::uniform_int_distribution<std::size_t> pick(s, candidates - 1);
                std::swap(order[s], order[pick(rng)]);
                if (order[s] == 0) {
                    return 1.0;
                }
            }
            return 0.0;
        },
        execution);
    return mc::summarize(accepted);
}

} // namespace isac::sensing
