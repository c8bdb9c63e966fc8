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

#ifndef ISAC_VALIDATION_HPP
#define ISAC_VALIDATION_HPP

#include "isac/geometry.hpp"
#include "isac/montecarlo.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace isac::validation {

/// Outcome of one acceptance criterion. `detail` holds one line per sub-check.
struct CheckResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::vector<std::string> detail;
};

struct ValidationOptions {
    std::uint64_t seed = 20260416;
    /// Monte Carlo realizations (draws) per estimate.
    std::size_t realizations = 100000;
    mc::Execution execution = mc::Execution::parallel;
};

/// tr(F^-1) written as the pair-sum ratio
/// 2 sum_ij D_ij (1 + cos(theta_i - theta_j)) / (|zeta|^2 sum_{(k,l) < (i,j)} D_kl D_ij (a_kl b_ij - a_ij b_kl)^2)
/// with D_ij = (d_i d_j)^-beta and pairs ordered by the linear index (i - 1) n + j.
double crlb_pair_sum(const geometry::NetworkRealization& realization, std::size_t n, double zeta_sq, double beta);

CheckResult check_mean_distance_tightness(const ValidationOptions& options);
CheckResult check_pair_sum_identity(const ValidationOptions& options);
CheckResult check_scaling_law(const ValidationOptions& options);
CheckResult check_optimal_sensing_cluster(const ValidationOptions& options);
CheckResult check_acceptance(const ValidationOptions& options);
CheckResult check_laplace(const ValidationOptions& options);
CheckResult check_rate(const ValidationOptions& options);
CheckResult check_tradeoff(const ValidationOptions& options);
/// Serial and parallel kernels at several thread counts give bit-identical estimates.
CheckResult check_kernel_determinism(const ValidationOptions& options);

/// Ids accepted by run_check, in report order: c1 ... c9.
const std::vector<std::string>& check_ids();
/// Throws DomainError for an unknown id.
CheckResult run_check(const std::string& id, const ValidationOptions& options);

} // namespace isac::validation

#endif // ISAC_VALIDATION_HPP
