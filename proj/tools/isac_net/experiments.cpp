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

#include "experiments.hpp"

#include "isac/communication.hpp"
#include "isac/geometry.hpp"
#include "isac/montecarlo.hpp"
#include "isac/sensing.hpp"
#include "isac/tradeoff.hpp"
#include "isac/validation.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include <fmt/format.h>

namespace isac::cli {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

long long as_cell(std::size_t v)
{
    return static_cast<long long>(v);
}

const char* form_name(sensing::AcceptanceForm form)
{
    switch (form) {
    case sensing::AcceptanceForm::poisson_sum:
        return "poisson_sum";
    case sensing::AcceptanceForm::q_psi:
        return "q_psi";
    case sensing::AcceptanceForm::q_psi_over_psi:
        return "q_psi_over_psi";
    }
    return "?";
}

} // namespace

ExperimentOutput run_sensing_crlb(const ExperimentConfig& config)
{
    const SystemParams& params = config.params;
    const auto gain = sensing::sensing_gain(params);
    const bool beta_two = params.beta == 2.0;

    ExperimentOutput out;
    Table& t = out.table;
    t.add_column("n", "sensing cluster size N");
    t.add_column("crlb_mc", "Monte Carlo mean of tr(F^-1) over PPP deployments (km^2)");
    t.add_column("crlb_mc_ci95", "95% confidence half-width of crlb_mc");
    t.add_column("singular_fraction", "fraction of deployments with a numerically singular FIM");
    t.add_column("crlb_mean_distance", "2 / (|zeta|^2 (sum_k E[d_k]^-beta)^2), all pairs");
    t.add_column("crlb_mean_distance_offdiag", "same with l != k pairs only");
    t.add_column("crlb_rank_power", "2 / (|zeta|^2 lambda^beta pi^beta (sum_k k^(-beta/2))^2)");
    t.add_column("crlb_ln2", "1 / (|zeta|^2 lambda^2 pi^2 ln^2 N) (beta = 2 only)");
    t.add_column("crlb_ln2_refined", "1 / (|zeta|^2 lambda^2 pi^2 (ln N + gamma + 1/(2N))^2) (beta = 2 only)");
    t.add_column("kappa_s", fmt::format("sensing acceptance probability ({} form)", form_name(config.options.kappa_form)));
    t.add_column("crlb_a_ln2", "crlb_ln2 / kappa_s^2 (beta = 2 only)");
    t.add_column("crlb_a_consistent", "2 / (kappa_s^2 |zeta|^2 lambda^2 pi^2 H_N^2) (beta = 2 only)");
    out.notes.push_back(fmt::format("|zeta|^2 = {}", gain.zeta_sq));
    if (!beta_two) {
        out.notes.push_back("beta != 2: ln^2 N asymptotes and CRLB_a columns are nan");
    }
    if (!config.options.monte_carlo) {
        out.notes.push_back("Monte Carlo disabled: crlb_mc columns are nan");
    }

    for (const std::size_t n : config.grids.n) {
        double mc_mean = kNan;
        double mc_ci = kNan;
        double singular = kNan;
        if (config.options.monte_carlo) {
            const auto mc = sensing::crlb_monte_carlo(params, gain, n, config.realizations,
                                                      mc::substream_seed(config.seed, n));
            mc_mean = mc.estimate.mean;
            mc_ci = mc.estimate.half_width_95;
            singular = mc.singular_fraction;
        }
        const double kappa = sensing::acceptance_sensing(params.psi, params.mu_s(), n, config.options.kappa_form);
        double ln2 = kNan;
        double refined = kNan;
        double a_ln2 = kNan;
        double a_consistent = kNan;
        if (beta_two) {
            const auto asym = sensing::crlb_asymptote(params, gain);
            ln2 = asym.scaled(static_cast<double>(n));
            refined = asym.refined(static_cast<double>(n));
            a_ln2 = sensing::crlb_with_acceptance(params, gain, n, sensing::CrlbaVariant::ln_squared,
                                                    config.options.kappa_form);
            a_consistent = sensing::crlb_with_acceptance(params, gain, n, sensing::CrlbaVariant::consistent,
                                                         config.options.kappa_form);
        }
        t.add_row({as_cell(n), mc_mean, mc_ci, singular, sensing::crlb_mean_distance(params, gain, n),
                   sensing::crlb_mean_distance(params, gain, n, sensing::PairSum::off_diagonal),
                   sensing::crlb_rank_power(params, gain, n), ln2, refined, kappa, a_ln2, a_consistent});
    }
    return out;
}

ExperimentOutput run_acceptance(const ExperimentConfig& config)
{
    ExperimentOutput out;
    Table& t = out.table;
    t.add_column("psi", "resource blocks per BS");
    t.add_column("mu", "user or target density over BS density");
    t.add_column("n", "cluster size (N for sensing, L for communication)");
    t.add_column("mean_load", "mu * Gamma(n + 1/2)^2 / Gamma(n)^2, mean requests per BS");
    t.add_column("kappa_s", fmt::format("sensing acceptance ({} form)", form_name(config.options.kappa_form)));
    t.add_column("kappa_s_q_psi", "Gamma(psi, m)/(psi-1)! + sum_{k>psi} (psi/k) P(k)");
    t.add_column("kappa_s_q_psi_over_psi", "Gamma(psi, m)/psi! + sum_{k>psi} (psi/k) P(k)");
    t.add_column("kappa_s_sim", "load simulation: psi of the k requests kept at random");
    t.add_column("kappa_s_sim_ci95", "95% confidence half-width of kappa_s_sim");
    t.add_column("kappa_c", "communication acceptance probability");
    t.add_column("kappa_c_sim", "load simulation: own user kept, psi - 1 of the others at random");
    t.add_column("kappa_c_sim_ci95", "95% confidence half-width of kappa_c_sim");

    std::uint64_t index = 0;
    for (const int psi : config.grids.psi) {
        for (const double mu : config.grids.mu) {
            for (const std::size_t n : config.grids.n) {
                const double load = mu * geometry::association_area_factor(n);
                EstimateWithCI sim_s{kNan, kNan, 0};
                EstimateWithCI sim_c{kNan, kNan, 0};
                if (config.options.monte_carlo) {
                    sim_s = sensing::load_acceptance_monte_carlo(psi, load, sensing::LoadRule::sensing,
                                                                 config.realizations,
                                                                 mc::substream_seed(config.seed, 2 * index));
                    sim_c = sensing::load_acceptance_monte_carlo(psi, load, sensing::LoadRule::communication,
                                                                 config.realizations,
                                                                 mc::substream_seed(config.seed, 2 * index + 1));
                }
                ++index;
                t.add_row({static_cast<long long>(psi), mu, as_cell(n), load,
                           sensing::acceptance_sensing(psi, mu, n, config.options.kappa_form),
                           sensing::acceptance_sensing(psi, mu, n, sensing::AcceptanceForm::q_psi),
                           sensing::acceptance_sensing(psi, mu, n, sensing::AcceptanceForm::q_psi_over_psi),
                           sim_s.mean, sim_s.half_width_95, comm::acceptance_comm(psi, mu, n), sim_c.mean,
                           sim_c.half_width_95});
            }
        }
    }
    return out;
}

ExperimentOutput run_comm_rate(const ExperimentConfig& config)
{
    const double scale = config.options.bits ? 1.0 / std::numbers::ln2 : 1.0;
    const char* unit = config.options.bits ? "bits" : "nats";

    ExperimentOutput out;
    Table& t = out.table;
    t.add_column("l", "communication cluster size L");
    t.add_column("p_c", "communication power fraction");
    t.add_column("kappa_c", "communication acceptance probability");
    t.add_column("rate_analytical", fmt::format("double-integral average rate ({}/channel use)", unit));
    t.add_column("rate_mc", fmt::format("Monte Carlo E[log(1 + SIR)] ({}/channel use)", unit));
    t.add_column("ci", "95% confidence half-width of rate_mc");
    t.add_column("tail_bound", "mean interference path gain beyond the simulation window");

    std::uint64_t index = 0;
    for (const std::size_t l : config.grids.l) {
        for (const double p : config.grids.p_c) {
            SystemParams params = config.params;
            params.p_c = p;
            const auto exact = comm::rate_analytical(params, l);
            double mc_rate = kNan;
            double ci = kNan;
            double tail = kNan;
            if (config.options.monte_carlo) {
                const auto sim =
                    comm::rate_monte_carlo(params, l, config.realizations, mc::substream_seed(config.seed, index));
                mc_rate = sim.rate * scale;
                ci = sim.half_width_95 * scale;
                tail = sim.interference_tail_bound;
            }
            ++index;
            t.add_row({as_cell(l), p, exact.kappa_c, exact.rate * scale, mc_rate, ci, tail});
        }
    }
    return out;
}

ExperimentOutput run_tradeoff(const ExperimentConfig& config)
{
    tradeoff::TradeoffOptions options;
    options.variant = config.options.crlba_variant;
    options.acceptance = config.options.kappa_form;
    options.interpolation = config.options.interpolation;
    options.tau_grid = config.grids.tau;
    const auto frontier =
        tradeoff::enumerate_frontier(config.params, config.grids.n, config.grids.l, config.grids.p_c, options);
    const double scale = config.options.bits ? 1.0 / std::numbers::ln2 : 1.0;
    const char* unit = config.options.bits ? "bits" : "nats";

    const auto on_frontier = [&](const tradeoff::TradeoffPoint& p) {
        for (const auto& f : frontier.points) {
            if (f.n == p.n && f.l == p.l && f.p_c == p.p_c) {
                return true;
            }
        }
        return false;
    };

    ExperimentOutput out;
    Table& t = out.table;
    t.add_column("n", "sensing cluster size N");
    t.add_column("l", "communication cluster size L");
    t.add_column("p_c", "communication power fraction");
    t.add_column("rate", fmt::format("average rate ({}/channel use)", unit));
    t.add_column("crlb_a", config.options.crlba_variant == sensing::CrlbaVariant::consistent
                               ? "CRLB_a, H_N form (km^2); the frontier objective"
                               : "CRLB_a, ln^2 N form (km^2); the frontier objective");
    t.add_column("crlb_a_scaled", "CRLB_a, ln^2 N form (km^2)");
    t.add_column("backhaul_used", "rate (nats) + e_sense * n");
    t.add_column("feasible", "backhaul_used <= c_backhaul");
    t.add_column("on_frontier", "member of the nondominated feasible set");
    for (const auto& p : frontier.evaluated) {
        t.add_row({as_cell(p.n), as_cell(p.l), p.p_c, p.rate * scale, p.crlb_a, p.crlb_a_scaled, p.backhaul_used,
                   p.feasible, on_frontier(p)});
    }
    out.notes.push_back("backhaul constraint evaluated with the rate in nats");

    Table& b = out.secondary;
    out.secondary_tag = "baseline";
    b.add_column("tau", "time fraction spent in the rate-optimal configuration");
    b.add_column("rate", fmt::format("average rate ({}/channel use)", unit));
    b.add_column("crlb_a", "objective CRLB_a of the time-shared scheme (km^2)");
    b.add_column("crlb_a_scaled", "ln^2 N-form CRLB_a of the time-shared scheme (km^2)");
    b.add_column("dominated", "weakly dominated by some frontier point");
    nlohmann::ordered_json baseline = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < frontier.baseline.size(); ++i) {
        const auto& p = frontier.baseline[i];
        bool dominated = false;
        for (const auto& f : frontier.points) {
            dominated = dominated || tradeoff::weakly_dominates(f, p);
        }
        b.add_row({frontier.tau[i], p.rate * scale, p.crlb_a, p.crlb_a_scaled, dominated});
        baseline.push_back({{"tau", frontier.tau[i]},
                            {"rate", p.rate * scale},
                            {"crlb_a", std::isfinite(p.crlb_a) ? nlohmann::ordered_json(p.crlb_a) : nullptr},
                            {"dominated", dominated}});
    }
    out.extra["baseline"] = baseline;
    if (!frontier.points.empty()) {
        auto corner = [&](const tradeoff::TradeoffPoint& p) {
            return nlohmann::ordered_json{{"n", p.n},         {"l", p.l},           {"p_c", p.p_c},
                                          {"rate", p.rate * scale}, {"crlb_a", p.crlb_a}, {"backhaul_used", p.backhaul_used}};
        };
        out.extra["corners"] = {{"communication", corner(frontier.points.back())},
                                {"sensing", corner(frontier.points.front())}};
    } else {
        out.notes.push_back("no feasible configuration: frontier and baseline are empty");
        out.extra["corners"] = nullptr;
    }
    return out;
}

ExperimentOutput run_validate(const ExperimentConfig& config)
{
    validation::ValidationOptions options;
    options.seed = config.seed;
    options.realizations = config.realizations;
    const auto& ids = config.options.checks.empty() ? validation::check_ids() : config.options.checks;

    ExperimentOutput out;
    Table& t = out.table;
    t.add_column("id", "acceptance check id");
    t.add_column("title", "what is compared");
    t.add_column("passed", "all sub-checks within tolerance");
    t.add_column("detail", "sub-check lines separated by ' | '");
    for (const auto& id : ids) {
        const auto result = validation::run_check(id, options);
        std::string detail;
        for (std::size_t i = 0; i < result.detail.size(); ++i) {
            detail += (i ? " | " : "") + result.detail[i];
        }
        std::cerr << fmt::format("{} {} {}\n", result.passed ? "PASS" : "FAIL", result.id, result.title);
        out.all_passed = out.all_passed && result.passed;
        t.add_row({result.id, result.title, result.passed, detail});
    }
    return out;
}

} // namespace isac::cli
