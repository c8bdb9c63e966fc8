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

#ifndef ISAC_SENSING_HPP
#define ISAC_SENSING_HPP

#include "isac/geometry.hpp"
#include "isac/montecarlo.hpp"
#include "isac/system_params.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace isac::sensing {

/// 2x2 Fisher information for the target position (symmetric, PSD up to rounding).
struct FisherInfo {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    double trace() const { return xx + yy; }
    /// Kahan's fma form; the products themselves add no rounding error.
    double determinant() const
    {
        const double w = xy * xy;
        const double e = std::fma(-xy, xy, w);
        return std::fma(xx, yy, -w) + e;
    }
};

/// |zeta|^2 = p_s G_t G_r B^2 sigma / (8 pi f_c^2 sigma_s^2).
struct SensingGain {
    double zeta_sq = 1.0;

    static SensingGain normalized(double zeta_sq);
    static SensingGain from_components(double p_s, double g_t, double g_r, double b_eff, double f_c,
                                       double sigma_rcs, double sigma_s_sq);
};

/// Gain implied by params.zeta_mode. In normalized mode this is p_s * zeta_sq_unit.
SensingGain sensing_gain(const SystemParams& params);

/// F = |zeta|^2 sum_i sum_j d_i^-beta d_j^-beta [a_ij^2, a_ij b_ij; a_ij b_ij, b_ij^2]
/// with a_ij = cos(theta_i) + cos(theta_j), b_ij = sin(theta_i) + sin(theta_j), over the
/// n nearest transceivers. Throws SizeError if the realization holds fewer than n points.
FisherInfo fim(const geometry::NetworkRealization& realization, std::size_t n,
               const SensingGain& gain, double beta);

/// Relative singularity threshold: det <= kSingularTol * (tr / 2)^2 counts as singular.
inline constexpr double kSingularTol = 1e-12;

/// tr(F^-1); +inf when F is singular in the sense of kSingularTol.
double crlb_from_fim(const FisherInfo& f);

struct CrlbEstimate {
    EstimateWithCI estimate;
    /// Fraction of realizations whose FIM fell under the singular threshold. They are
    /// kept in the average with their (large) finite tr/det value.
    double singular_fraction = 0.0;
};

/// Sample mean of tr(F^-1) over n_real PPP deployments of the BSs around the target.
CrlbEstimate crlb_monte_carlo(const SystemParams& params, const SensingGain& gain, std::size_t n,
                              std::size_t n_real, std::uint64_t seed,
                              mc::Execution execution = mc::Execution::parallel);

enum class PairSum {
    full,         ///< all (l, k) pairs
    off_diagonal, ///< l != k only
};

/// 2 / (|zeta|^2 sum_l sum_k E[d_k]^-beta E[d_l]^-beta).
double crlb_mean_distance(const SystemParams& params, const SensingGain& gain, std::size_t n,
                  PairSum pairs = PairSum::full,
                  geometry::DistanceLaw law = geometry::DistanceLaw::exact);

/// Closed form after E[d_k] ~ sqrt(k / (lambda pi)):
/// 2 / (|zeta|^2 lambda^beta pi^beta sum_l sum_k k^(-beta/2) l^(-beta/2)).
double crlb_rank_power(const SystemParams& params, const SensingGain& gain, std::size_t n);

/// Large-N behaviour at beta = 2. Two constants are kept side by side because the
/// stated limit of CRLB * ln^2 N (1 / (|zeta|^2 lambda^2 pi^2)) is half of what the
/// finite-N closed form 2 / (|zeta|^2 lambda^2 pi^2 H_N^2) tends to.
struct CrlbAsymptote {
    double ln2_constant = 0.0; ///< 1 / (|zeta|^2 lambda_b^2 pi^2)
    double closed_form_constant = 0.0; ///< 2 / (|zeta|^2 lambda_b^2 pi^2)

    /// ln2_constant / ln^2 N
    double scaled(double n) const;
    /// ln2_constant / (ln N + gamma + 1/(2N))^2
    double refined(double n) const;
};

/// Throws UnsupportedRegimeError unless beta == 2.
CrlbAsymptote crlb_asymptote(const SystemParams& params, const SensingGain& gain);

/// Which closed form of the load-limited acceptance probability to evaluate.
enum class AcceptanceForm {
    /// sum_{n<=psi} Pr[n] + sum_{n>psi} (psi/n) Pr[n] with n ~ Poisson(mu * Nbar); the
    /// exact acceptance probability of the uniform-drop load model.
    poisson_sum,
    /// Gamma(psi, mu Nbar) / (psi-1)! + sum_{n>=psi+1} psi (mu Nbar)^n / (n n!) e^-mu Nbar.
    /// Misses the n = psi atom.
    q_psi,
    /// Same with psi! in the first denominator.
    q_psi_over_psi,
};

/// kappa_s for a BS with psi resource blocks when each target asks its n nearest BSs.
double acceptance_sensing(int psi, double mu_s, std::size_t n,
                          AcceptanceForm form = AcceptanceForm::poisson_sum,
                          geometry::DistanceLaw law = geometry::DistanceLaw::exact);

enum class CrlbaVariant {
    ln_squared, ///< 1 / (kappa_s^2 |zeta|^2 lambda_b^2 pi^2 ln^2 N)
    consistent, ///< 2 / (kappa_s^2 |zeta|^2 lambda_b^2 pi^2 H_N^2)
};

/// CRLB with load-limited acceptance. Requires n >= 2 and beta == 2.
double crlb_with_acceptance(const SystemParams& params, const SensingGain& gain, std::size_t n,
                            CrlbaVariant variant = CrlbaVariant::ln_squared,
                            AcceptanceForm form = AcceptanceForm::poisson_sum);

/// sum_{k >= first} weight(k) Pr[Poisson(mean) = k].
double poisson_weighted_tail(double mean, std::size_t first, const std::function<double(std::size_t)>& weight);

/// Acceptance rule applied by an overloaded BS in the load simulation.
enum class LoadRule {
    sensing,       ///< keep psi of the n requests uniformly at random
    communication, ///< keep its own user, then psi - 1 of the other n - 1 requests
};

/// Load simulation: the number of requests landing in the average association area
/// (mean_load = mu * Nbar) is drawn per trial, the BS applies `rule`, and the outcome
/// for one tagged request is recorded. Returns the acceptance frequency.
EstimateWithCI load_acceptance_monte_carlo(int psi, double mean_load, LoadRule rule,
                                           std::size_t n_draws, std::uint64_t seed,
                                           mc::Execution execution = mc::Execution::parallel);

} // namespace isac::sensing

#endif // ISAC_SENSING_HPP
