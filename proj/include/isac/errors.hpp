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

#ifndef ISAC_ERRORS_HPP
#define ISAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isac {

/// Argument outside the domain of a formula (negative density, alpha <= 2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative numerics (quadrature, series) gave up. Carries the best estimate reached.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

/// Requested more points than a realization holds.
class SizeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Stacked ZF channel is numerically rank deficient; callers resample the fading.
class DegenerateChannelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed form requested outside the regime it was derived for (e.g. beta != 2).
class UnsupportedRegimeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace isac

#endif // ISAC_ERRORS_HPP
