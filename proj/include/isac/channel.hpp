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

#ifndef ISAC_CHANNEL_HPP
#define ISAC_CHANNEL_HPP

#include "isac/montecarlo.hpp"
#include "isac/system_params.hpp"

#include <Eigen/Dense>

namespace isac::channel {

/// Gamma laws of the effective gains: desired g ~ Gamma(M_t - 1, p_c),
/// interferer g ~ Gamma(1, 1) (moment matched).
struct GainModel {
    double desired_shape = 3.0;
    double desired_scale = 0.5;
    double interferer_shape = 1.0;
    double interferer_scale = 1.0;

    static GainModel from(const SystemParams& params);
    void validate() const;
};

/// Steering vector with entries exp(j pi (m - 1) cos theta), m = 1..M.
Eigen::VectorXcd steering_vector(int antennas, double theta);

/// i.i.d. CN(0, 1) entries.
Eigen::VectorXcd sample_channel(int antennas, Rng& rng);

struct ZfBeams {
    /// H (H^H H)^-1 with H = [h_comm, a(theta)]; satisfies H^H W = I_2.
    Eigen::MatrixXcd pseudo_inverse;
    /// Unit-norm columns of the pseudo-inverse. Nulling survives the scaling.
    Eigen::VectorXcd w_comm;
    Eigen::VectorXcd w_sense;
    double condition_number = 1.0;
};

/// Zero-forcing precoder separating the communication user and the sensing direction.
/// Throws DegenerateChannelError when cond(H) > 1e12.
ZfBeams zf_precoder(const Eigen::VectorXcd& h_comm, double theta);

double sample_desired_gain(const GainModel& model, Rng& rng);
double sample_interferer_gain(const GainModel& model, Rng& rng);

/// Gains obtained by actually building the ZF precoder for random fading:
/// desired = p_c |h^H w_c|^2, sensing = |a^H w_s|^2, and leakage to an independent
/// user g = p_c |h'^H w_c|^2 + p_s |h'^H w_s|^2. Degenerate draws are resampled.
struct ZfGainDraw {
    double desired = 0.0;
    double sensing = 0.0;
    double leakage = 0.0;
};

ZfGainDraw sample_zf_gains(const SystemParams& params, Rng& rng);

} // namespace isac::channel

#endif // ISAC_CHANNEL_HPP
