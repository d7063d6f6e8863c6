// SPDX-License-Identifier: Apache-2.0
//
// wptsim - multi-user scheduling simulator for far-field wireless power transfer
// Copyright (C) 2026 wptsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include "wptsim/sim.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "wptsim/rng.hpp"

namespace wptsim {

std::uint32_t select_round_robin(std::uint64_t slot_index, std::uint32_t n_ues) {
    if (n_ues < 1) throw std::invalid_argument("select_round_robin: n_ues >= 1 required");
    return static_cast<std::uint32_t>(slot_index % n_ues);
}

std::uint32_t select_opportunistic(std::span<const double> powers) {
    if (powers.empty()) throw std::invalid_argument("select_opportunistic: empty power list");
    std::uint32_t best = 0;
    for (std::uint32_t i = 1; i < powers.size(); ++i) {
        if (!(powers[i] >= 0.0))
            throw std::invalid_argument("select_opportunistic: powers must be >= 0");
        if (powers[i] > powers[best]) best = i; // ties stay with the lowest index
    }
    if (!(powers[0] >= 0.0))
        throw std::invalid_argument("select_opportunistic: powers must be >= 0");
    return best;
}

namespace {

struct ChunkResult {
    double power_sum = 0.0;
    std::vector<double> ue_power_sum;
    std::vector<std::uint64_t> ue_count;
};

constexpr std::uint64_t chunk_slots = 1 << 16;

void validate(const SimConfig& cfg) {
    cfg.params.require_valid();
    cfg.scenario.require_valid(cfg.params);
    if (cfg.n_ues < 1) throw std::invalid_argument("sim: n_ues >= 1 required");
    if (cfg.n_slots < 1) throw std::invalid_argument("sim: n_slots >= 1 required");
}

} // namespace

SimStats run_simulation(const SimConfig& cfg, unsigned n_threads) {
    validate(cfg);

    const double c = rectifier_constant(cfg.params);
    const double alpha = cfg.params.alpha;
    const double beta = cfg.params.beta;
    const double sigma_h2 = cfg.params.sigma_h2;
    const double r_ex = cfg.params.r_ex;
    const double r_net = cfg.params.r_net;
    const bool het = cfg.scenario.kind == ScenarioKind::heterogeneous;
    const double d_fixed = cfg.scenario.d_fixed;
    const std::uint32_t n_ues = cfg.n_ues;

    const std::uint64_t n_chunks = (cfg.n_slots + chunk_slots - 1) / chunk_slots;
    std::vector<ChunkResult> chunks(n_chunks);

    SimStats stats;
    stats.n_slots_run = cfg.n_slots;
    if (cfg.collect_samples) stats.scheduled_samples.resize(cfg.n_slots);

    // Power of one user in one slot, recomputable in isolation from the
    // counter stream.
    auto power_at = [&](const SlotRng& slot_rng, std::uint32_t ue) {
        const double h2 = sample_fading_gain(slot_rng.uniform(ue, DrawPurpose::fading), sigma_h2);
        const double d = het ? sample_distance_annulus(slot_rng.uniform(ue, DrawPurpose::distance),
                                                       r_ex, r_net)
                             : d_fixed;
        return instantaneous_dc_power(c, beta, d, alpha, h2);
    };

    auto run_chunk = [&](std::uint64_t chunk_index) {
        ChunkResult& out = chunks[chunk_index];
        out.ue_power_sum.assign(n_ues, 0.0);
        out.ue_count.assign(n_ues, 0);
        const std::uint64_t first = chunk_index * chunk_slots;
        const std::uint64_t last = std::min(first + chunk_slots, cfg.n_slots);
        for (std::uint64_t slot = first; slot < last; ++slot) {
            const SlotRng slot_rng(cfg.seed, 0, slot);
            std::uint32_t chosen;
            double delivered;
            if (cfg.scheduler == Scheduler::round_robin) {
                chosen = select_round_robin(slot, n_ues);
                delivered = power_at(slot_rng, chosen);
            } else {
                chosen = 0;
                delivered = power_at(slot_rng, 0);
                for (std::uint32_t ue = 1; ue < n_ues; ++ue) {
                    const double power = power_at(slot_rng, ue);
                    if (power > delivered) {
                        delivered = power;
                        chosen = ue;
                    }
                }
            }
            out.power_sum += delivered;
            out.ue_power_sum[chosen] += delivered;
            out.ue_count[chosen] += 1;
            if (cfg.collect_samples) stats.scheduled_samples[slot] = delivered;
        }
    };

    unsigned workers = n_threads != 0 ? n_threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_chunks)));

    if (workers == 1) {
        for (std::uint64_t i = 0; i < n_chunks; ++i) run_chunk(i);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t i = next.fetch_add(1); i < n_chunks; i = next.fetch_add(1))
                    run_chunk(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    // Merge in chunk order: the reduction order is fixed, so totals are
    // bit-identical no matter how chunks were assigned to workers.
    stats.per_ue_slot_counts.assign(n_ues, 0);
    stats.per_ue_avg_power.assign(n_ues, 0.0);
    double total = 0.0;
    for (const auto& chunk : chunks) {
        total += chunk.power_sum;
        for (std::uint32_t ue = 0; ue < n_ues; ++ue) {
            stats.per_ue_slot_counts[ue] += chunk.ue_count[ue];
            stats.per_ue_avg_power[ue] += chunk.ue_power_sum[ue];
        }
    }
    const double slots = static_cast<double>(cfg.n_slots);
    stats.avg_delivered_power = total / slots;
    for (auto& v : stats.per_ue_avg_power) v /= slots;
    return stats;
}

double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf) {
    if (sorted_samples.empty()) throw std::invalid_argument("ks_statistic: empty sample set");
    const double m = static_cast<double>(sorted_samples.size());
    double d_max = 0.0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
        if (i > 0 && sorted_samples[i] < sorted_samples[i - 1])
            throw std::invalid_argument("ks_statistic: samples must be sorted ascending");
        const double f = cdf(sorted_samples[i]);
        const double upper = (static_cast<double>(i) + 1.0) / m - f;
        const double lower = f - static_cast<double>(i) / m;
        d_max = std::max({d_max, upper, lower});
    }
    return d_max;
}

double transfer_efficiency(double avg_power, double p_erp) {
    if (!(p_erp > 0.0)) throw std::domain_error("transfer_efficiency: p_erp must be > 0");
    return avg_power / p_erp;
}

namespace {

double r_squared(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("growth_fit: degenerate abscissae");
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    const double mean_y = sy / n;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double fit = intercept + slope * x[i];
        ss_res += (y[i] - fit) * (y[i] - fit);
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }
    if (ss_tot == 0.0) throw std::invalid_argument("growth_fit: constant means are degenerate");
    return 1.0 - ss_res / ss_tot;
}

} // namespace

GrowthFit growth_fit(std::span<const double> n_values, std::span<const double> means) {
    if (n_values.size() != means.size())
        throw std::invalid_argument("growth_fit: mismatched lengths");
    if (n_values.size() < 5) throw std::invalid_argument("growth_fit: need >= 5 points");
    std::vector<double> log_n(n_values.size());
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (!(n_values[i] > 0.0)) throw std::invalid_argument("growth_fit: n values must be > 0");
        log_n[i] = std::log(n_values[i]);
    }
    return {r_squared(n_values, means), r_squared(log_n, means)};
}

} // namespace wptsim
