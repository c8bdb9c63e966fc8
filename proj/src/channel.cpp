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

#include "isac/channel.hpp"

#include "isac/errors.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace isac::channel {

using std::numbers::pi;

GainModel GainModel::from(const SystemParams& params)
{
    GainModel model;
    model.desired_shape = params.m_t - 1.0;
    model.desired_scale = params.p_c;
    return model;
}

void GainModel::validate() const
{
    if (!(desired_shape >= 1.0) || !(desired_scale >= 0.0) || !(interferer_shape > 0.0) ||
        !(interferer_scale > 0.0)) {
        throw DomainError("GainModel: desired_shape must be >= 1 and scales non-negative");
    }
}

Eigen::VectorXcd steering_vector(int antennas, double theta)
{
    if (antennas < 1) {
        throw DomainError("steering_vector: antennas must be >= 1");
    }
    Eigen::VectorXcd a(antennas);
    const double phase = pi * std::cos(theta);
    for (int m = 0; m < antennas; ++m) {
        a(m) = std::polar(1.0, phase * m);
    }
    return a;
}

Eigen::VectorXcd sample_channel(int antennas, Rng& rng)
{
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    Eigen::VectorXcd h(antennas);
    for (int m = 0; m < antennas; ++m) {
        const double re = normal(rng);
        const double im = normal(rng);
        h(m) = {re, im};
    }
    return h;
}

ZfBeams zf_precoder(const Eigen::VectorXcd& h_comm, double theta)
{
    const auto antennas = static_cast<int>(h_comm.size());
    if (antennas < 2) {
        throw DomainError("zf_precoder: needs at least two transmit antennas");
    }
    Eigen::MatrixXcd stacked(antennas, 2);
    stacked.col(0) = h_comm;
    stacked.col(1) = steering_vector(antennas, theta);

    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
    const auto& sv = svd.singularValues();
    const double cond = sv(1) > 0.0 ? sv(0) / sv(1) : INFINITY;
    if (!(cond <= 1e12)) {
        throw DegenerateChannelError("zf_precoder: stacked channel is rank deficient");
    }

    ZfBeams beams;
    beams.condition_number = cond;
    const Eigen::Matrix2cd gram = stacked.adjoint() * stacked;
    beams.pseudo_inverse = stacked * gram.inverse();
    beams.w_comm = beams.pseudo_inverse.col(0).normalized();
    beams.w_sense = beams.pseudo_inverse.col(1).normalized();
    return beams;
}

double sample_desired_gain(const GainModel& model, Rng& rng)
{
    std::gamma_distribution<double> gamma(model.desired_shape, 1.0);
    return model.desired_scale * gamma(rng);
}

double sample_interferer_gain(const GainModel& model, Rng& rng)
{
    std::gamma_distribution<double> gamma(model.interferer_shape, model.interferer_scale);
    return gamma(rng);
}

ZfGainDraw sample_zf_gains(const SystemParams& params, Rng& rng)
{
    std::uniform_real_distribution<double> bearing(0.0, 2.0 * pi);
    for (;;) {
        const Eigen::VectorXcd h = sample_channel(params.m_t, rng);
        const double theta = bearing(rng);
        ZfBeams beams;
        try {
            beams = zf_precoder(h, theta);
        } catch (const DegenerateChannelError&) {
            continue;
        }
        const Eigen::VectorXcd a = steering_vector(params.m_t, theta);
        const Eigen::VectorXcd other_user = sample_channel(params.m_t, rng);

        ZfGainDraw draw;
        draw.desired = params.p_c * std::norm(h.dot(beams.w_comm));
        draw.sensing = std::norm(a.dot(beams.w_sense));
        draw.leakage = params.p_c * std::norm(other_user.dot(beams.w_comm)) +
                       params.p_s() * std::norm(other_user.dot(beams.w_sense));
        return draw;
    }
}

} // namespace isac::channel
