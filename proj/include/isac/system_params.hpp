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

#ifndef ISAC_SYSTEM_PARAMS_HPP
#define ISAC_SYSTEM_PARAMS_HPP

#include <optional>

namespace isac {

/// How |zeta|^2, the sensing SNR normalizer in the Fisher information, is formed.
enum class ZetaMode {
    normalized, ///< |zeta|^2 = p_s * zeta_sq_unit (distances in km, unit-free gain)
    physical,   ///< |zeta|^2 = p_s G_t G_r B^2 sigma / (8 pi f_c^2 sigma_s^2)
};

/// Network and link constants. Distances in km, densities in km^-2.
/// Defaults reproduce the evaluation setup: M_t = 4, M_r = 5, unit densities,
/// alpha = 4, beta = 2, sigma = 1, sigma_s^2 = -80 dB, C_backhaul = 6, psi = 15.
struct SystemParams {
    int m_t = 4;
    int m_r = 5;
    double lambda_b = 1.0;
    double lambda_u = 1.0;
    double lambda_s = 1.0;
    double alpha = 4.0;
    double beta = 2.0;
    double p_c = 0.5;
    double sigma_rcs = 1.0;
    double sigma_s_sq = 1e-8;
    double b_eff = 1e7;
    double f_c = 3.5e9;
    int psi = 15;
    double c_backhaul = 6.0;
    double e_sense = 0.5;

    ZetaMode zeta_mode = ZetaMode::normalized;
    double zeta_sq_unit = 1.0;
    std::optional<double> g_r_override; ///< receive beamforming gain; M_r when unset

    double p_s() const { return 1.0 - p_c; }
    double mu_s() const { return lambda_s / lambda_b; }
    double mu_c() const { return lambda_u / lambda_b; }
    double transmit_gain() const { return m_t - 1.0; }
    double receive_gain() const { return g_r_override.value_or(static_cast<double>(m_r)); }

    /// Throws DomainError naming the first violated invariant.
    void validate() const;
};

} // namespace isac

#endif // ISAC_SYSTEM_PARAMS_HPP
