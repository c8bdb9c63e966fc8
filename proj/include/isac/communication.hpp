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

#ifndef ISAC_COMMUNICATION_HPP
#define ISAC_COMMUNICATION_HPP

#include "isac/geometry.hpp"
#include "isac/montecarlo.hpp"
#include "isac/numerics.hpp"
#include "isac/system_params.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace isac::comm {

/// PGFL exponent of the annulus between the serving BS (normalized distance 1) and
/// the cluster edge 1/eta, for Gamma(K, 1)-faded links:
/// H1(x, K, alpha, eta) = 2 int_1^{1/eta} (1 - (1 + x t^-alpha)^-K) t dt, evaluated in
/// closed form with two incomplete Beta terms.
double h1(double x, double k, double alpha, double eta);

/// Same exponent for the Exp(1)-faded field beyond the cluster edge:
/// H2(x, alpha, eta) = 2 int_{1/eta}^inf (1 - (1 + x t^-alpha)^-1) t dt.
double h2(double x, double alpha, double eta);

/// Direct quadrature of the radial integrals above; independent check of h1/h2.
double h1_by_quadrature(double x, double k, double alpha, double eta);
double h2_by_quadrature(double x, double alpha, double eta);

/// Arguments of the conditional Laplace transforms: distance r to the serving BS,
/// eta = r / r_L, and the cooperation acceptance probability kappa_c.
struct LaplaceArgs {
    double z = 0.0;
    double r = 0.0;
    double eta = 1.0;
    double kappa_c = 1.0;

    void validate() const;
};

/// E[exp(-z U)], U the normalized signal of the accepting cooperators.
double laplace_u(const LaplaceArgs& args, const SystemParams& params);
/// E[exp(-z I1)], I1 the normalized interference of in-cluster decliners.
double laplace_i1(const LaplaceArgs& args, const SystemParams& params);
/// E[exp(-z I2)], I2 the normalized interference from beyond the cluster.
double laplace_i2(const LaplaceArgs& args, const SystemParams& params);

/// kappa_c = Gamma(psi, mu Lbar)/(psi-1)! + sum_{n>=psi} (psi-1) (mu Lbar)^n / ((n-1) n!) e^-mu Lbar.
/// At n = psi the weight (psi-1)/(n-1) is read as 1, which also covers psi = 1.
double acceptance_comm(int psi, double mu_c, std::size_t l,
                       geometry::DistanceLaw law = geometry::DistanceLaw::exact);

enum class Method { analytical, monte_carlo };

/// Average rate in nats per channel use.
struct RateResult {
    double rate = 0.0;
    double kappa_c = 1.0;
    std::size_t l = 1;
    double p_c = 0.0;
    Method method = Method::analytical;
    double half_width_95 = 0.0;           ///< Monte Carlo only
    std::size_t n_samples = 0;            ///< Monte Carlo only
    double interference_tail_bound = 0.0; ///< Monte Carlo only: mean path gain beyond the window

    double bits() const;
};

struct RateOptions {
    std::optional<double> kappa_c_override;
    numerics::QuadratureSpec outer{1e-7, 1e-10, 2000};
    numerics::QuadratureSpec inner{1e-9, 1e-12, 2000};
};

/// Below this z the rate integrand is replaced by its z -> 0 limit.
inline constexpr double kSmallZ = 1e-6;

/// Inner integrand of the rate double integral (without the eta density), i.e.
/// (1/z) [1/(1 + A) - (1 + p_c z)^(1-M_t) / (1 + A + kappa_c H1(z p_c, M_t - 1))]
/// with A = (1 - kappa_c) H1(z, 1) + H2(z).
double rate_integrand(double z, double eta, double kappa_c, const SystemParams& params);

/// R_c by nested adaptive quadrature: z on (0, inf), eta on (0, 1) weighted by the
/// distance-ratio density. l = 1 uses the point mass eta = 1.
RateResult rate_analytical(const SystemParams& params, std::size_t l, const RateOptions& options = {});

struct RateMcOptions {
    std::optional<double> kappa_c_override;
    /// Expected number of BSs in the simulation window (sets the truncation radius).
    double window_mean_points = 1000.0;
    mc::Execution execution = mc::Execution::parallel;
};

/// E[log(1 + SIR)] over PPP deployments: the l nearest BSs form the cluster, BS 1
/// always serves, BSs 2..l accept with probability kappa_c and otherwise interfere.
RateResult rate_monte_carlo(const SystemParams& params, std::size_t l, std::size_t n_real,
                            std::uint64_t seed, const RateMcOptions& options = {});

/// E[log(1 + X/Y)] = int_0^inf (1/z) (1 - E[e^-zX]) E[e^-zY] dz for independent X, Y.
double hamdi_log_moment(const numerics::RealFunction& laplace_num,
                        const numerics::RealFunction& laplace_den,
                        const numerics::QuadratureSpec& spec = {});

struct LaplaceMcResult {
    std::vector<EstimateWithCI> u;
    std::vector<EstimateWithCI> i1;
    std::vector<EstimateWithCI> i2;
};

/// Conditioned simulation of the three transforms at fixed (r, eta): cooperators and
/// decliners are independent PPPs of intensity kappa_c lambda_b and (1 - kappa_c) lambda_b
/// in the annulus (r, r/eta), the out-of-cluster field a PPP of intensity lambda_b beyond
/// r/eta. The out-of-cluster field is simulated over `tail_mean_points` expected points;
/// beyond that its Campbell mean is added.
LaplaceMcResult laplace_monte_carlo(const SystemParams& params, double r, double eta, double kappa_c,
                                    std::span<const double> zs, std::size_t n_draws, std::uint64_t seed,
                                    double tail_mean_points = 2000.0,
                                    mc::Execution execution = mc::Execution::parallel);

} // namespace isac::comm

#endif // ISAC_COMMUNICATION_HPP
