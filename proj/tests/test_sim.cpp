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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "helpers.hpp"
#include "wptsim/analytic.hpp"
#include "wptsim/rng.hpp"
#include "wptsim/sim.hpp"

using namespace wptsim;
using wptsim::test::rel_diff;
using wptsim::test::table_params;

namespace {

SimConfig base_config(Scheduler sched, Scenario scenario, std::uint32_t n_ues,
                      std::uint64_t n_slots, std::uint64_t seed = 2026) {
    SimConfig cfg;
    cfg.params = table_params(100.0);
    cfg.scenario = scenario;
    cfg.scheduler = sched;
    cfg.n_ues = n_ues;
    cfg.n_slots = n_slots;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("counter stream properties") {
    // slot-prefixed and flat paths agree bit for bit
    for (std::uint64_t seed : {0ULL, 42ULL, 919191ULL}) {
        for (std::uint64_t slot : {0ULL, 1ULL, 65535ULL, 65536ULL}) {
            const SlotRng rng(seed, 0, slot);
            for (std::uint64_t ue : {0ULL, 1ULL, 49ULL}) {
                for (DrawPurpose purpose : {DrawPurpose::fading, DrawPurpose::distance}) {
                    CHECK(rng.uniform(ue, purpose) ==
                          uniform_draw(seed, 0, slot, ue, purpose));
                }
            }
        }
    }

    // open-interval uniformity
    std::vector<double> u(100'000);
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = uniform_draw(7, 0, i, 3, DrawPurpose::fading);
    for (double v : u) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
    std::sort(u.begin(), u.end());
    CHECK(ks_statistic(u, [](double x) { return x; }) < 0.01);

    // purposes decorrelate
    CHECK(uniform_draw(7, 0, 5, 3, DrawPurpose::fading) !=
          uniform_draw(7, 0, 5, 3, DrawPurpose::distance));
}

TEST_CASE("round-robin selection") {
    CHECK(select_round_robin(0, 5) == 0);
    CHECK(select_round_robin(7, 5) == 2);
    std::vector<int> counts(4, 0);
    for (std::uint64_t slot = 0; slot < 40; ++slot) counts[select_round_robin(slot, 4)]++;
    for (int c : counts) CHECK(c == 10);
    CHECK_THROWS_AS(select_round_robin(3, 0), std::invalid_argument);
}

TEST_CASE("opportunistic selection") {
    const std::vector<double> single = {0.3};
    CHECK(select_opportunistic(single) == 0);
    const std::vector<double> three = {0.1, 0.5, 0.2};
    CHECK(select_opportunistic(three) == 1);
    const std::vector<double> tie = {0.5, 0.5, 0.1};
    CHECK(select_opportunistic(tie) == 0);

    for (int k = 0; k < 100; ++k) {
        std::vector<double> powers(6);
        for (int i = 0; i < 6; ++i)
            powers[i] = uniform_draw(11, 0, k, i, DrawPurpose::fading);
        const auto pick = select_opportunistic(powers);
        for (double scale : {0.5, 3.0, 1e6}) {
            std::vector<double> scaled = powers;
            for (double& v : scaled) v *= scale;
            CHECK(select_opportunistic(scaled) == pick);
        }
    }

    CHECK_THROWS_AS(select_opportunistic(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(select_opportunistic(std::vector<double>{0.2, -0.1}),
                    std::invalid_argument);
}

TEST_CASE("round-robin homogeneous run matches the closed-form mean") {
    const auto cfg = base_config(Scheduler::round_robin, Scenario::homogeneous(10.0), 4, 200'000);
    const SimStats stats = run_simulation(cfg);
    CHECK(stats.n_slots_run == cfg.n_slots);
    CHECK(rel_diff(stats.avg_delivered_power, avg_rr_hom(cfg.params, 10.0)) < 0.01);

    const auto total_count = std::accumulate(stats.per_ue_slot_counts.begin(),
                                             stats.per_ue_slot_counts.end(), std::uint64_t{0});
    CHECK(total_count == cfg.n_slots);
    const auto [lo, hi] =
        std::minmax_element(stats.per_ue_slot_counts.begin(), stats.per_ue_slot_counts.end());
    CHECK(*hi - *lo <= 1);

    const double per_ue_total = std::accumulate(stats.per_ue_avg_power.begin(),
                                                stats.per_ue_avg_power.end(), 0.0);
    CHECK(rel_diff(per_ue_total, stats.avg_delivered_power) < 1e-12);
}

TEST_CASE("invalid configurations are rejected before any work") {
    auto cfg = base_config(Scheduler::round_robin, Scenario::homogeneous(10.0), 0, 100);
    CHECK_THROWS_AS(run_simulation(cfg), std::invalid_argument);
    cfg = base_config(Scheduler::round_robin, Scenario::homogeneous(10.0), 2, 0);
    CHECK_THROWS_AS(run_simulation(cfg), std::invalid_argument);
    cfg = base_config(Scheduler::round_robin, Scenario::homogeneous(1.0), 2, 100);
    CHECK_THROWS_AS(run_simulation(cfg), std::invalid_argument);
    cfg = base_config(Scheduler::round_robin, Scenario::homogeneous(10.0), 2, 100);
    cfg.params.alpha = 2.0;
    CHECK_THROWS_AS(run_simulation(cfg), std::invalid_argument);
}

TEST_CASE("single-user schedulers coincide slot by slot") {
    auto rr = base_config(Scheduler::round_robin, Scenario::heterogeneous(), 1, 20'000);
    rr.collect_samples = true;
    auto os = rr;
    os.scheduler = Scheduler::opportunistic;
    const SimStats rr_stats = run_simulation(rr);
    const SimStats os_stats = run_simulation(os);
    REQUIRE(rr_stats.scheduled_samples.size() == os_stats.scheduled_samples.size());
    for (std::size_t i = 0; i < rr_stats.scheduled_samples.size(); ++i)
        CHECK(rr_stats.scheduled_samples[i] == os_stats.scheduled_samples[i]);
}

TEST_CASE("runs are bit-identical across worker counts") {
    for (Scenario scenario : {Scenario::homogeneous(10.0), Scenario::heterogeneous()}) {
        auto cfg = base_config(Scheduler::opportunistic, scenario, 3, 200'000);
        cfg.collect_samples = true;
        const SimStats one = run_simulation(cfg, 1);
        const SimStats two = run_simulation(cfg, 2);
        const SimStats eight = run_simulation(cfg, 8);
        CHECK(one.avg_delivered_power == two.avg_delivered_power);
        CHECK(one.avg_delivered_power == eight.avg_delivered_power);
        CHECK(one.per_ue_slot_counts == two.per_ue_slot_counts);
        CHECK(one.per_ue_slot_counts == eight.per_ue_slot_counts);
        CHECK(one.per_ue_avg_power == two.per_ue_avg_power);
        CHECK(one.scheduled_samples == eight.scheduled_samples);
    }
}

TEST_CASE("opportunistic scheduling dominates round-robin on shared draws") {
    for (std::uint32_t n : {1u, 2u, 5u}) {
        const auto rr =
            run_simulation(base_config(Scheduler::round_robin, Scenario::heterogeneous(), n,
                                       100'000));
        const auto os =
            run_simulation(base_config(Scheduler::opportunistic, Scenario::heterogeneous(), n,
                                       100'000));
        CHECK(os.avg_delivered_power >= rr.avg_delivered_power);
        if (n > 1) CHECK(os.avg_delivered_power > rr.avg_delivered_power);
    }
}

TEST_CASE("opportunistic choice is the slot-wise argmax") {
    auto cfg = base_config(Scheduler::opportunistic, Scenario::heterogeneous(), 5, 2'000);
    cfg.collect_samples = true;
    const SimStats stats = run_simulation(cfg);
    const double c = rectifier_constant(cfg.params);
    for (std::uint64_t slot = 0; slot < cfg.n_slots; ++slot) {
        const SlotRng rng(cfg.seed, 0, slot);
        double best = 0.0;
        for (std::uint32_t ue = 0; ue < cfg.n_ues; ++ue) {
            const double h2 = sample_fading_gain(rng.uniform(ue, DrawPurpose::fading),
                                                 cfg.params.sigma_h2);
            const double d = sample_distance_annulus(rng.uniform(ue, DrawPurpose::distance),
                                                     cfg.params.r_ex, cfg.params.r_net);
            best = std::max(best, instantaneous_dc_power(c, cfg.params.beta, d,
                                                         cfg.params.alpha, h2));
        }
        CHECK(stats.scheduled_samples[slot] == best);
    }
}

TEST_CASE("opportunistic homogeneous run matches the harmonic-number mean") {
    const auto cfg =
        base_config(Scheduler::opportunistic, Scenario::homogeneous(10.0), 10, 200'000);
    const SimStats stats = run_simulation(cfg);
    CHECK(rel_diff(stats.avg_delivered_power, avg_os_hom_exact(cfg.params, 10.0, 10)) < 0.01);
}

TEST_CASE("opportunistic heterogeneous run matches the order-statistic mean") {
    for (std::uint32_t n : {2u, 5u}) {
        const auto cfg =
            base_config(Scheduler::opportunistic, Scenario::heterogeneous(), n, 400'000);
        const SimStats stats = run_simulation(cfg);
        CHECK(rel_diff(stats.avg_delivered_power, mean_os_het_numeric(cfg.params, n, 1e-8)) <
              0.03);
    }
}

TEST_CASE("normalized homogeneous maxima approach the Gumbel law") {
    auto cfg = base_config(Scheduler::opportunistic, Scenario::homogeneous(10.0), 100, 2'000);
    cfg.collect_samples = true;
    const SimStats stats = run_simulation(cfg);
    std::vector<double> samples = stats.scheduled_samples;
    std::sort(samples.begin(), samples.end());
    const EvtParams evt = gumbel_constants(cfg.params, 10.0, 100);
    const double ks = ks_statistic(samples, [&](double x) { return limiting_cdf(evt, x); });
    CHECK(ks < 0.05);
}

TEST_CASE("delivered powers scale exactly with the beacon power") {
    auto lo = base_config(Scheduler::opportunistic, Scenario::heterogeneous(), 5, 10'000);
    lo.params.p_erp = dbm_to_watts(43.0);
    lo.collect_samples = true;
    auto hi = lo;
    hi.params.p_erp = dbm_to_watts(50.0);
    const SimStats lo_stats = run_simulation(lo);
    const SimStats hi_stats = run_simulation(hi);
    const double ratio = std::pow(10.0, 0.7);
    for (std::size_t i = 0; i < lo_stats.scheduled_samples.size(); ++i) {
        CHECK(rel_diff(hi_stats.scheduled_samples[i], ratio * lo_stats.scheduled_samples[i]) <
              1e-12);
    }
    CHECK(rel_diff(hi_stats.avg_delivered_power, ratio * lo_stats.avg_delivered_power) < 1e-12);
}

TEST_CASE("KS statistic reference behaviour") {
    // exact value for a single sample at the reference median
    const std::vector<double> median = {0.5};
    CHECK(ks_statistic(median, [](double x) { return x; }) == 0.5);

    // samples from the reference law stay under the 99% critical value
    std::vector<double> u(10'000);
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = uniform_draw(2024, 0, i, 0, DrawPurpose::fading);
    std::sort(u.begin(), u.end());
    CHECK(ks_statistic(u, [](double x) { return x; }) < 1.63 / std::sqrt(10'000.0));

    // a location shift forces at least the CDF gap
    std::vector<double> shifted = u;
    for (double& v : shifted) v += 0.3;
    CHECK(ks_statistic(shifted, [](double x) { return std::clamp(x, 0.0, 1.0); }) >= 0.29);

    const std::vector<double> unsorted = {0.5, 0.2};
    CHECK_THROWS_AS(ks_statistic(unsorted, [](double x) { return x; }),
                    std::invalid_argument);
    CHECK_THROWS_AS(ks_statistic(std::vector<double>{}, [](double x) { return x; }),
                    std::invalid_argument);
}

TEST_CASE("transfer efficiency") {
    CHECK(transfer_efficiency(1.0, 100.0) == 0.01);
    CHECK(rel_diff(transfer_efficiency(2.83675e-2, 100.0), 2.83675e-4) < 1e-15);
    CHECK_THROWS_AS(transfer_efficiency(1.0, 0.0), std::domain_error);

    // the rectifier constant is linear in the beacon power, so efficiency is
    // invariant to it
    SystemParams lo = table_params(dbm_to_watts(43.0));
    SystemParams hi = table_params(dbm_to_watts(53.0));
    const double eff_lo = transfer_efficiency(avg_rr_hom(lo, 10.0), lo.p_erp);
    const double eff_hi = transfer_efficiency(avg_rr_hom(hi, 10.0), hi.p_erp);
    CHECK(rel_diff(eff_lo, eff_hi) < 1e-12);
}

TEST_CASE("growth fit separates linear from logarithmic trends") {
    std::vector<double> ns, linear, logs, harmonic;
    double h = 0.0;
    for (int n = 1; n <= 50; ++n) {
        h += 1.0 / n;
        if (n < 5) continue;
        ns.push_back(n);
        linear.push_back(3.0 * n + 1.0);
        logs.push_back(2.0 * std::log(n) + 0.25);
        harmonic.push_back(h);
    }
    CHECK(growth_fit(ns, linear).linear_r2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(growth_fit(ns, logs).log_r2 == doctest::Approx(1.0).epsilon(1e-12));

    const GrowthFit fit = growth_fit(ns, harmonic);
    CHECK(fit.log_r2 > fit.linear_r2);
    CHECK(fit.log_r2 > 0.999);

    const std::vector<double> few = {1.0, 2.0, 3.0, 4.0};
    const std::vector<double> few_y = {1.0, 2.0, 3.0, 4.0};
    CHECK_THROWS_AS(growth_fit(few, few_y), std::invalid_argument);
    const std::vector<double> const_y = {1.0, 1.0, 1.0, 1.0, 1.0};
    const std::vector<double> five_n = {1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK_THROWS_AS(growth_fit(five_n, const_y), std::invalid_argument);
}
