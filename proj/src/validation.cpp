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

#include "isac/validation.hpp"

#include "isac/communication.hpp"
#include "isac/errors.hpp"
#include "isac/numerics.hpp"
#include "isac/sensing.hpp"
#include "isac/tradeoff.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace isac::validation {

using std::numbers::pi;

namespace {

SystemParams evaluation_params()
{
    SystemParams params;
    params.p_c = 0.0; // |zeta|^2 = p_s * zeta_sq_unit = 1
    return params;
}

void record(CheckResult& result, bool ok, std::string line)
{
    result.passed = result.passed && ok;
    result.detail.push_back(fmt::format("[{}] {}", ok ? "ok" : "FAIL", line));
}

CheckResult start(std::string id, std::string title)
{
    CheckResult result;
    result.id = std::move(id);
    result.title = std::move(title);
    result.passed = true;
    return result;
}

} // namespace

double crlb_pair_sum(const geometry::NetworkRealization& realization, std::size_t n, double zeta_sq, double beta)
{
    if (n < 1 || n > realization.size()) {
        throw SizeError("crlb_pair_sum: cluster size out of range");
    }
    const auto at = [&](std::size_t i) { return std::pow(realization.distances[i - 1], -beta); };
    const auto theta = [&](std::size_t i) { return realization.angles[i - 1]; };
    const auto a = [&](std::size_t i, std::size_t j) { return std::cos(theta(i)) + std::cos(theta(j)); };
    const auto b = [&](std::size_t i, std::size_t j) { return std::sin(theta(i)) + std::sin(theta(j)); };
    const auto nn = static_cast<long>(n);

    double numerator = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            numerator += at(i) * at(j) * (1.0 + std::cos(theta(i) - theta(j)));
        }
    }
    double denominator = 0.0;
    for (std::size_t l = 1; l <= n; ++l) {
        for (std::size_t k = 1; k <= n; ++k) {
            for (std::size_t i = k; i <= n; ++i) {
                const long bound = (static_cast<long>(k) - static_cast<long>(i)) * nn + static_cast<long>(l);
                for (long j = std::max(bound + 1, 1L); j <= nn; ++j) {
                    const auto ju = static_cast<std::size_t>(j);
                    const double cross = a(k, l) * b(i, ju) - a(i, ju) * b(k, l);
                    denominator += at(i) * at(ju) * at(l) * at(k) * cross * cross;
                }
            }
        }
    }
    return 2.0 * numerator / (zeta_sq * denominator);
}

CheckResult check_mean_distance_tightness(const ValidationOptions& options)
{
    CheckResult result = start("c1", "closed-form CRLB vs Monte Carlo");
    const SystemParams params = evaluation_params();
    const auto gain = sensing::SensingGain::normalized(1.0);
    for (const std::size_t n : {2, 3, 4, 5, 8, 10, 15, 20}) {
        const double bound = n <= 4 ? 0.35 : 0.15;
        const auto mc = sensing::crlb_monte_carlo(params, gain, n, options.realizations, options.seed + n,
                                                  options.execution);
        const double closed = sensing::crlb_mean_distance(params, gain, n);
        const double rel = std::abs(closed - mc.estimate.mean) / mc.estimate.mean;
        record(result, rel <= bound,
               fmt::format("N={:2d} closed={:.6g} mc={:.6g} +/- {:.3g} rel={:.3f} (bound {:.2f}, singular {:.2g})", n,
                           closed, mc.estimate.mean, mc.estimate.half_width_95, rel, bound, mc.singular_fraction));
    }
    return result;
}

CheckResult check_pair_sum_identity(const ValidationOptions& options)
{
    CheckResult result = start("c2", "pair-sum CRLB equals tr(F^-1)");
    const SystemParams params = evaluation_params();
    const auto gain = sensing::SensingGain::normalized(1.0);
    constexpr std::size_t kRealizations = 1000;
    const auto errors = mc::map_realizations<double>(
        kRealizations, options.seed,
        [&](Rng& rng, std::size_t index) {
            const std::size_t n = 2 + index % 5;
            const auto deployment = geometry::sample_ppp(params.lambda_b, n, rng);
            const double direct = sensing::crlb_from_fim(sensing::fim(deployment, n, gain, params.beta));
            const double pairs = crlb_pair_sum(deployment, n, gain.zeta_sq, params.beta);
            return std::abs(direct - pairs) / std::abs(direct);
        },
        options.execution);
    const double worst = *std::max_element(errors.begin(), errors.end());
    record(result, worst <= 1e-9, fmt::format("{} realizations, N=2..6, max relative gap {:.3g}", kRealizations, worst));
    return result;
}

CheckResult check_scaling_law(const ValidationOptions&)
{
    CheckResult result = start("c3", "CRLB ln^2 N converges with halving differences");
    const SystemParams params = evaluation_params();
    const auto gain = sensing::SensingGain::normalized(1.0);
    const auto asym = sensing::crlb_asymptote(params, gain);
    std::vector<double> scaled;
    for (const double n : {1e3, 1e4, 1e5, 1e6}) {
        const double ln_n = std::log(n);
        scaled.push_back(sensing::crlb_rank_power(params, gain, static_cast<std::size_t>(n)) * ln_n * ln_n);
        result.detail.push_back(fmt::format("N={:.0e} CRLB*ln^2N={:.8f}", n, scaled.back()));
    }
    bool monotone = true;
    for (std::size_t i = 1; i < scaled.size(); ++i) {
        const bool up = scaled[i] > scaled[i - 1];
        monotone = monotone && up == (scaled[1] > scaled[0]);
    }
    record(result, monotone, "successive values move in one direction");
    for (std::size_t i = 2; i < scaled.size(); ++i) {
        const double prev = std::abs(scaled[i - 1] - scaled[i - 2]);
        const double cur = std::abs(scaled[i] - scaled[i - 1]);
        const double ratio = prev / cur;
        record(result, ratio >= 2.0,
               fmt::format("difference shrink factor {:.3f} (required >= 2)", ratio));
    }
    result.detail.push_back(fmt::format("limit constant: stated 1/(|zeta|^2 lambda^2 pi^2) = {:.8f}, "
                                        "closed-form 2/(|zeta|^2 lambda^2 pi^2) = {:.8f}",
                                        asym.ln2_constant, asym.closed_form_constant));
    return result;
}

CheckResult check_optimal_sensing_cluster(const ValidationOptions&)
{
    CheckResult result = start("c4", "optimal sensing cluster size equals psi");
    SystemParams params = evaluation_params();
    params.psi = 15;
    params.lambda_s = params.lambda_b;
    const auto gain = sensing::sensing_gain(params);
    const auto argmin = [&](sensing::AcceptanceForm form) {
        std::size_t best_n = 0;
        double best = INFINITY;
        for (std::size_t n = 2; n <= 30; ++n) {
            const double value =
                sensing::crlb_with_acceptance(params, gain, n, sensing::CrlbaVariant::consistent, form);
            if (value < best) {
                best = value;
                best_n = n;
            }
        }
        return best_n;
    };
    const std::size_t best_n = argmin(sensing::AcceptanceForm::poisson_sum);
    record(result, best_n >= 14 && best_n <= 16,
           fmt::format("argmin over N=2..30: N={} (kappa_s={:.4f}); q_psi form gives N={}", best_n,
                       sensing::acceptance_sensing(params.psi, params.mu_s(), best_n),
                       argmin(sensing::AcceptanceForm::q_psi)));
    return result;
}

CheckResult check_acceptance(const ValidationOptions& options)
{
    CheckResult result = start("c5", "acceptance probabilities vs load simulation");
    std::uint64_t stream = 0;
    double worst_s = 0.0;
    double worst_c = 0.0;
    for (const int psi : {5, 15}) {
        for (const double mu : {0.5, 1.0, 2.0}) {
            for (const std::size_t n : {2, 5, 15}) {
                const double load = mu * geometry::association_area_factor(n);
                const double kappa_s = sensing::acceptance_sensing(psi, mu, n);
                const auto sim_s = sensing::load_acceptance_monte_carlo(
                    psi, load, sensing::LoadRule::sensing, options.realizations, options.seed + stream++,
                    options.execution);
                const double kappa_c = comm::acceptance_comm(psi, mu, n);
                const auto sim_c = sensing::load_acceptance_monte_carlo(
                    psi, load, sensing::LoadRule::communication, options.realizations, options.seed + stream++,
                    options.execution);
                const double gap_s = std::abs(kappa_s - sim_s.mean);
                const double gap_c = std::abs(kappa_c - sim_c.mean);
                worst_s = std::max(worst_s, gap_s);
                worst_c = std::max(worst_c, gap_c);
                record(result, gap_s <= 0.02 && gap_c <= 0.02,
                       fmt::format("psi={:2d} mu={:.1f} n={:2d} kappa_s={:.4f} sim={:.4f} | kappa_c={:.4f} sim={:.4f}",
                                   psi, mu, n, kappa_s, sim_s.mean, kappa_c, sim_c.mean));
            }
        }
    }
    result.detail.push_back(fmt::format("max gap kappa_s {:.4f}, kappa_c {:.4f} (bound 0.02)", worst_s, worst_c));
    return result;
}

CheckResult check_laplace(const ValidationOptions& options)
{
    CheckResult result = start("c6", "Laplace transforms vs conditioned simulation and quadrature");
    const SystemParams params; // p_c = 0.5, M_t = 4, alpha = 4, lambda_b = 1
    constexpr double kR = 0.5;
    constexpr double kKappa = 0.7;
    const std::array<double, 3> zs{0.1, 1.0, 10.0};
    std::uint64_t stream = 0;
    for (const double eta : {0.3, 0.7}) {
        const auto sim =
            comm::laplace_monte_carlo(params, kR, eta, kKappa, zs, options.realizations, options.seed + stream++,
                                      2000.0, options.execution);
        for (std::size_t iz = 0; iz < zs.size(); ++iz) {
            const comm::LaplaceArgs args{zs[iz], kR, eta, kKappa};
            const std::array<double, 3> exact{comm::laplace_u(args, params), comm::laplace_i1(args, params),
                                              comm::laplace_i2(args, params)};
            const std::array<const EstimateWithCI*, 3> est{&sim.u[iz], &sim.i1[iz], &sim.i2[iz]};
            const std::array<const char*, 3> names{"U", "I1", "I2"};
            for (std::size_t k = 0; k < 3; ++k) {
                const double se = est[k]->standard_error();
                const double score = std::abs(exact[k] - est[k]->mean) / std::max(se, 1e-300);
                record(result, score <= 3.0,
                       fmt::format("eta={:.1f} z={:<4} {:<2} formula={:.6f} sim={:.6f} ({:.2f} SE)", eta, zs[iz],
                                   names[k], exact[k], est[k]->mean, score));
            }
        }
    }

    double worst = 0.0;
    std::size_t count = 0;
    for (const double x : {0.01, 0.3, 1.0, 5.0, 50.0}) {
        for (const double alpha : {2.5, 3.0, 4.0, 5.0}) {
            for (const double eta : {0.1, 0.3, 0.6, 0.9, 1.0}) {
                for (const double k : {1.0, 3.0}) {
                    const double v = comm::h1(x, k, alpha, eta);
                    worst = std::max(worst, std::abs(v - comm::h1_by_quadrature(x, k, alpha, eta)) / std::max(1.0, std::abs(v)));
                    ++count;
                }
                const double v = comm::h2(x, alpha, eta);
                worst = std::max(worst, std::abs(v - comm::h2_by_quadrature(x, alpha, eta)) / std::max(1.0, std::abs(v)));
                ++count;
            }
        }
    }
    record(result, worst <= 1e-6,
           fmt::format("H1/H2 closed form vs radial quadrature on {} grid points: max gap {:.3g}", count, worst));
    return result;
}

CheckResult check_rate(const ValidationOptions& options)
{
    CheckResult result = start("c7", "rate double integral vs Monte Carlo and cluster-size shape");
    SystemParams params;
    params.m_t = 4;
    params.alpha = 4.0;
    params.psi = 15;
    params.lambda_u = params.lambda_b;
    std::uint64_t stream = 0;
    for (const std::size_t l : {1, 2, 3, 5}) {
        for (const double p : {0.3, 0.6, 0.9}) {
            params.p_c = p;
            const auto exact = comm::rate_analytical(params, l);
            comm::RateMcOptions mc_options;
            mc_options.execution = options.execution;
            const auto sim =
                comm::rate_monte_carlo(params, l, options.realizations, options.seed + stream++, mc_options);
            const double rel = std::abs(exact.rate - sim.rate) / sim.rate;
            record(result, rel <= 0.05,
                   fmt::format("L={} p_c={:.1f} kappa_c={:.4f} integral={:.5f} mc={:.5f} +/- {:.5f} rel={:.4f}", l, p,
                               exact.kappa_c, exact.rate, sim.rate, sim.half_width_95, rel));
        }
    }

    params.p_c = 0.6;
    std::array<std::size_t, 2> argmax{};
    const std::array<double, 2> mus{1.0, 2.0};
    constexpr std::size_t kMaxL = 20;
    for (std::size_t m = 0; m < mus.size(); ++m) {
        params.lambda_u = mus[m] * params.lambda_b;
        double best = -1.0;
        std::string curve;
        for (std::size_t l = 1; l <= kMaxL; ++l) {
            const double rate = comm::rate_analytical(params, l).rate;
            curve += fmt::format("{}{:.4f}", l == 1 ? "" : " ", rate);
            if (rate > best) {
                best = rate;
                argmax[m] = l;
            }
        }
        record(result, argmax[m] > 1 && argmax[m] < kMaxL,
               fmt::format("mu_c={:.0f}: interior argmax L*={} of L=1..{}: {}", mus[m], argmax[m], kMaxL, curve));
    }
    record(result, argmax[1] <= argmax[0],
           fmt::format("L* does not increase when mu_c doubles ({} -> {})", argmax[0], argmax[1]));
    return result;
}

CheckResult check_tradeoff(const ValidationOptions&)
{
    CheckResult result = start("c8", "cooperative frontier vs time sharing and backhaul expansion");
    SystemParams params;
    params.e_sense = 0.5;
    std::vector<std::size_t> n_grid;
    for (std::size_t n = 2; n <= 12; ++n) {
        n_grid.push_back(n);
    }
    const std::vector<std::size_t> l_grid{1, 2, 3, 4, 5, 6, 7, 8};
    const std::vector<double> pc_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    tradeoff::RateTable table(params);

    std::vector<tradeoff::Frontier> frontiers;
    for (const double c : {4.0, 6.0, 8.0}) {
        params.c_backhaul = c;
        frontiers.push_back(tradeoff::enumerate_frontier(params, n_grid, l_grid, pc_grid, {}, &table));
        const auto& f = frontiers.back();
        const auto feasible = std::count_if(f.evaluated.begin(), f.evaluated.end(),
                                            [](const tradeoff::TradeoffPoint& p) { return p.feasible; });
        result.detail.push_back(fmt::format("C_backhaul={:.0f}: {} feasible, {} on frontier", c, feasible,
                                            f.points.size()));
    }

    const auto& base = frontiers[1];
    record(result, !base.points.empty(), "C_backhaul=6 frontier is nonempty");
    std::size_t covered = 0;
    std::size_t interior = 0;
    for (std::size_t i = 0; i < base.baseline.size(); ++i) {
        if (!(base.tau[i] > 0.0 && base.tau[i] < 1.0)) {
            continue;
        }
        ++interior;
        const auto& b = base.baseline[i];
        const bool hit = std::any_of(base.points.begin(), base.points.end(),
                                     [&](const tradeoff::TradeoffPoint& p) { return tradeoff::weakly_dominates(p, b); });
        covered += hit ? 1 : 0;
        if (!hit) {
            record(result, false, fmt::format("tau={:.1f} baseline (rate {:.4f}, CRLB {:.4g}) not dominated", base.tau[i],
                                              b.rate, b.crlb_a));
        }
    }
    record(result, interior > 0 && covered == interior,
           fmt::format("{}/{} interior time-sharing points weakly dominated", covered, interior));

    for (std::size_t k = 1; k < frontiers.size(); ++k) {
        const auto& small = frontiers[k - 1];
        const auto& large = frontiers[k];
        bool nested = true;
        for (std::size_t i = 0; i < small.evaluated.size(); ++i) {
            nested = nested && (!small.evaluated[i].feasible || large.evaluated[i].feasible);
        }
        bool better = true;
        for (const auto& p : small.points) {
            better = better && std::any_of(large.points.begin(), large.points.end(),
                                           [&](const tradeoff::TradeoffPoint& q) { return tradeoff::weakly_dominates(q, p); });
        }
        record(result, nested && better,
               fmt::format("C step {} -> {}: feasible set nested={}, frontier not worse={}", 2 + 2 * k, 4 + 2 * k,
                           nested, better));
    }
    return result;
}

CheckResult check_kernel_determinism(const ValidationOptions& options)
{
    CheckResult result = start("c9", "Monte Carlo kernels independent of thread count");
    const SystemParams params = evaluation_params();
    const auto gain = sensing::SensingGain::normalized(1.0);
    SystemParams comm_params;
    comm_params.p_c = 0.6;
    const std::size_t n_real = std::min<std::size_t>(options.realizations, 20000);

    const auto reference_crlb =
        sensing::crlb_monte_carlo(params, gain, 6, n_real, options.seed, mc::Execution::serial).estimate;
    comm::RateMcOptions serial;
    serial.execution = mc::Execution::serial;
    const auto reference_rate = comm::rate_monte_carlo(comm_params, 3, n_real / 4, options.seed, serial);
    for (const int threads : {1, 2, 4}) {
        mc::ThreadOverride guard(threads);
        const auto crlb = sensing::crlb_monte_carlo(params, gain, 6, n_real, options.seed, mc::Execution::parallel).estimate;
        comm::RateMcOptions parallel;
        parallel.execution = mc::Execution::parallel;
        const auto rate = comm::rate_monte_carlo(comm_params, 3, n_real / 4, options.seed, parallel);
        const bool same = crlb.mean == reference_crlb.mean && crlb.half_width_95 == reference_crlb.half_width_95 &&
                          rate.rate == reference_rate.rate && rate.half_width_95 == reference_rate.half_width_95;
        record(result, same,
               fmt::format("{} thread(s): crlb {:.17g} vs serial {:.17g}; rate {:.17g} vs serial {:.17g}", threads,
                           crlb.mean, reference_crlb.mean, rate.rate, reference_rate.rate));
    }
    return result;
}

const std::vector<std::string>& check_ids()
{
    static const std::vector<std::string> ids{"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9"};
    return ids;
}

CheckResult run_check(const std::string& id, const ValidationOptions& options)
{
    if (id == "c1") return check_mean_distance_tightness(options);
    if (id == "c2") return check_pair_sum_identity(options);
    if (id == "c3") return check_scaling_law(options);
    if (id == "c4") return check_optimal_sensing_cluster(options);
    if (id == "c5") return check_acceptance(options);
    if (id == "c6") return check_laplace(options);
    if (id == "c7") return check_rate(options);
    if (id == "c8") return check_tradeoff(options);
    if (id == "c9") return check_kernel_determinism(options);
    throw DomainError("run_check: unknown check id '" + id + "'");
}

} // namespace isac::validation
