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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

namespace {

using namespace isac;
using namespace isac::channel;

TEST(SteeringVector, UnitModulusEntries)
{
    const Eigen::VectorXcd a = steering_vector(6, 0.4);
    for (int m = 0; m < 6; ++m) {
        EXPECT_NEAR(std::abs(a(m)), 1.0, 1e-15);
    }
    EXPECT_NEAR(std::arg(a(1)), std::numbers::pi * std::cos(0.4), 1e-14);
}

TEST(ZfPrecoder, NullsCrossTerms)
{
    Rng rng = mc::substream(21, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::VectorXcd h = sample_channel(4, rng);
        const double theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
        const ZfBeams beams = zf_precoder(h, theta);
        const Eigen::VectorXcd a = steering_vector(4, theta);
        const double scale = beams.condition_number;
        EXPECT_LT(std::abs(a.dot(beams.w_comm)), 1e-12 * scale);
        EXPECT_LT(std::abs(h.dot(beams.w_sense)), 1e-12 * scale);
        EXPECT_NEAR(beams.w_comm.norm(), 1.0, 1e-13);
        EXPECT_NEAR(beams.w_sense.norm(), 1.0, 1e-13);

        Eigen::MatrixXcd stacked(4, 2);
        stacked << h, a;
        const Eigen::MatrixXcd identity = stacked.adjoint() * beams.pseudo_inverse;
        EXPECT_LT((identity - Eigen::Matrix2cd::Identity()).norm(), 1e-10 * scale);
    }
}

TEST(ZfPrecoder, RejectsRankDeficient)
{
    const Eigen::VectorXcd a = steering_vector(4, 1.0);
    EXPECT_THROW(zf_precoder(a * std::complex<double>(0.0, 2.0), 1.0), DegenerateChannelError);
    EXPECT_THROW(zf_precoder(Eigen::VectorXcd::Ones(1), 1.0), DomainError);
}

TEST(GainLaw, ZfDesiredGainIsGammaMinusOne)
{
    SystemParams params;
    params.m_t = 4;
    params.p_c = 0.6;
    const auto desired = mc::map_realizations<double>(40000, 22, [&](Rng& rng, std::size_t) {
        return sample_zf_gains(params, rng).desired / params.p_c;
    });
    const EstimateWithCI mean = mc::summarize(desired);
    EXPECT_NEAR(mean.mean, 3.0, 4.0 * mean.standard_error());

    std::vector<double> centered(desired.size());
    for (std::size_t i = 0; i < desired.size(); ++i) {
        centered[i] = (desired[i] - 3.0) * (desired[i] - 3.0);
    }
    const EstimateWithCI variance = mc::summarize(centered);
    EXPECT_NEAR(variance.mean, 3.0, 4.0 * variance.standard_error());
}

TEST(GainLaw, LeakageHasUnitMean)
{
    SystemParams params;
    params.p_c = 0.3;
    const auto leakage = mc::map_realizations<double>(40000, 23, [&](Rng& rng, std::size_t) {
        return sample_zf_gains(params, rng).leakage;
    });
    const EstimateWithCI e = mc::summarize(leakage);
    EXPECT_NEAR(e.mean, 1.0, 4.0 * e.standard_error());
}

TEST(GainLaw, ModelSamplersMatchMoments)
{
    SystemParams params;
    params.m_t = 6;
    params.p_c = 0.25;
    const GainModel model = GainModel::from(params);
    EXPECT_EQ(model.desired_shape, 5.0);
    EXPECT_EQ(model.desired_scale, 0.25);
    const auto desired = mc::map_realizations<double>(
        40000, 24, [&](Rng& rng, std::size_t) { return sample_desired_gain(model, rng); });
    const auto interferer = mc::map_realizations<double>(
        40000, 25, [&](Rng& rng, std::size_t) { return sample_interferer_gain(model, rng); });
    const EstimateWithCI d = mc::summarize(desired);
    const EstimateWithCI i = mc::summarize(interferer);
    EXPECT_NEAR(d.mean, 1.25, 4.0 * d.standard_error());
    EXPECT_NEAR(i.mean, 1.0, 4.0 * i.standard_error());
}

TEST(GainLaw, ValidateRejectsBadModels)
{
    GainModel model;
    model.desired_shape = 0.5;
    EXPECT_THROW(model.validate(), DomainError);
    model = GainModel{};
    model.interferer_scale = 0.0;
    EXPECT_THROW(model.validate(), DomainError);
}

} // namespace
