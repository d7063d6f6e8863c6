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

#ifndef WPTSIM_SIM_HPP
#define WPTSIM_SIM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "wptsim/channel.hpp"
#include "wptsim/core.hpp"

namespace wptsim {

enum class Scheduler { round_robin, opportunistic };

/// One Monte Carlo run description.
struct SimConfig {
    SystemParams params;
    Scenario scenario;
    Scheduler scheduler = Scheduler::round_robin;
    std::uint32_t n_ues = 1;
    std::uint64_t n_slots = 1;
    std::uint64_t seed = 0;
    bool collect_samples = false;
};

/// Collected results of one run. per_ue_avg_power[i] is the power delivered
/// to user i averaged over every slot (zero in slots where i was not
/// scheduled), so the entries sum to avg_delivered_power.
struct SimStats {
    double avg_delivered_power = 0.0; ///< [W]
    std::vector<std::uint64_t> per_ue_slot_counts;
    std::vector<double> per_ue_avg_power;   ///< [W]
    std::vector<double> scheduled_samples;  ///< per-slot delivered power, if collected
    std::uint64_t n_slots_run = 0;
};

/// Scheduler primitives.
std::uint32_t select_round_robin(std::uint64_t slot_index, std::uint32_t n_ues);
std::uint32_t select_opportunistic(std::span<const double> powers);

/// Runs the slotted engine: per slot, draw each user's fading (and distance
/// in the heterogeneous scenario), compute the instantaneous output DC
/// power, schedule one user, and accrue its power. Bit-identical results for
/// a fixed (seed, cfg) at any worker count; n_threads = 0 picks the hardware
/// default.
SimStats run_simulation(const SimConfig& cfg, unsigned n_threads = 0);

/// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of the
/// (ascending) samples and a reference CDF.
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf);

/// Time-average delivered power over the radiated power.
double transfer_efficiency(double avg_power, double p_erp);

/// Coefficients of determination of least-squares fits of the means against
/// n and against ln(n). Needs >= 5 points; constant means are degenerate.
struct GrowthFit {
    double linear_r2 = 0.0;
    double log_r2 = 0.0;
};
GrowthFit growth_fit(std::span<const double> n_values, std::span<const double> means);

} // namespace wptsim

#endif // WPTSIM_SIM_HPP
