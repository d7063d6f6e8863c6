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
#include <vector>

#include "helpers.hpp"
#include "wptsim/channel.hpp"
#include "wptsim/rng.hpp"
#include "wptsim/sim.hpp"

using namespace wptsim;
using wptsim::test::rel_diff;
using wptsim::test::table_params;

TEST_CASE("fading gain inverse-CDF reference points") {
    CHECK(rel_diff(sample_fading_gain(1.0 - std::exp(-1.0), 1.0), 1.0) < 1e-12);
    CHECK(rel_diff(sample_fading_gain(0.5, 1.0), 0.6931471805599453) < 1e-12);
    CHECK_THROWS_AS(sample_fading_gain(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(sample_fading_gain(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(sample_fading_gain(-0.2, 1.0), std::domain_error);
}

TEST_CASE("fading gain obeys the law of large numbers") {
    const std::uint64_t n = 1'000'000;
    double sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i)
        sum += sample_fading_gain(uniform_draw(404, 0, i, 0, DrawPurpose::fading), 2.0);
    // 3 standard errors of an exponential with mean 2 at n = 1e6
    CHECK(std::abs(sum / n - 2.0) < 3.0 * (2.0 / 1e3));
}

TEST_CASE("annulus distance inverse-CDF reference points") {
    CHECK(sample_distance_annulus(0.0, 2.0, 30.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sample_distance_annulus(1.0, 2.0, 30.0) == doctest::Approx(30.0).epsilon(1e-15));
    CHECK(rel_diff(sample_distance_annulus(0.5, 2.0, 30.0), 21.2602916255) < 1e-11);
    CHECK_THROWS_AS(sample_distance_annulus(0.5, 30.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(sample_distance_annulus(1.5, 2.0, 30.0), std::domain_error);
}

TEST_CASE("annulus distance empirical CDF matches the quadratic law") {
    const std::uint64_t n = 1'000'000;
    std::vector<double> d(n);
    for (std::uint64_t i = 0; i < n; ++i)
        d[i] = sample_distance_annulus(uniform_draw(77, 0, i, 0, DrawPurpose::distance), 2.0,
                                       30.0);
    std::sort(d.begin(), d.end());
    const double ks = ks_statistic(
        d, [](double x) { return (x * x - 4.0) / (900.0 - 4.0); });
    CHECK(ks < 0.002);
}

TEST_CASE("channel gain and DC power reference points") {
    CHECK(channel_gain(1.0, 1.0, 4.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_diff(channel_gain(1.0, 10.0, 4.0, 1.0), 1e-4) < 1e-12);
    CHECK(rel_diff(channel_gain(2.0, 2.0, 3.0, 0.5), 0.125) < 1e-15);
    CHECK_THROWS_AS(channel_gain(1.0, 0.0, 4.0, 1.0), std::domain_error);

    CHECK(rel_diff(instantaneous_dc_power(102.123, 1.0, 10.0, 4.0, 1.0), 1.02123e-2) < 1e-12);
    CHECK(instantaneous_dc_power(102.123, 1.0, 5.0, 4.0, 0.0) == 0.0);
    CHECK(rel_diff(instantaneous_dc_power(102.123, 1.0, 2.0, 4.0, 1.0), 6.3826875) < 1e-12);
}

TEST_CASE("DC power is strictly decreasing in distance beyond 1 m") {
    double prev = instantaneous_dc_power(102.123, 1.0, 1.0001, 4.0, 0.7);
    for (double d : {1.5, 2.0, 5.0, 10.0, 20.0, 30.0}) {
        const double cur = instantaneous_dc_power(102.123, 1.0, d, 4.0, 0.7);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("receive amplitude depends only on the power-gain product") {
    CHECK(receive_amplitude(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_diff(receive_amplitude(100.0, 1e-4), 0.1) < 1e-12);
    CHECK(receive_amplitude(123.4, 0.0) == 0.0);

    // The in-phase/quadrature decomposition carries an arbitrary phase that
    // cancels in the envelope.
    for (int k = 0; k < 64; ++k) {
        const double p = 1.0 + 3.0 * uniform_draw(5, 0, k, 0, DrawPurpose::fading);
        const double g = uniform_draw(5, 0, k, 1, DrawPurpose::fading);
        const double phase = 6.283185307179586 * uniform_draw(5, 0, k, 2, DrawPurpose::fading);
        const double y_i = std::sqrt(p * g) * std::cos(phase);
        const double y_q = std::sqrt(p * g) * std::sin(phase);
        const double a_iq = std::sqrt(y_i * y_i + y_q * y_q);
        CHECK(std::abs(a_iq - receive_amplitude(p, g)) <= 1e-12 * receive_amplitude(p, g));
    }
}

TEST_CASE("homogeneous DC power empirical CDF matches the exponential law") {
    const SystemParams p = table_params(100.0);
    const double c = rectifier_constant(p);
    const double scale = c * p.beta * p.sigma_h2 * std::pow(10.0, -p.alpha);
    const std::uint64_t n = 1'000'000;
    std::vector<double> x(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double h2 =
            sample_fading_gain(uniform_draw(1234, 0, i, 0, DrawPurpose::fading), p.sigma_h2);
        x[i] = instantaneous_dc_power(c, p.beta, 10.0, p.alpha, h2);
    }
    std::sort(x.begin(), x.end());
    const double ks =
        ks_statistic(x, [scale](double v) { return 1.0 - std::exp(-v / scale); });
    CHECK(ks < 0.002);
}

TEST_CASE("scenario validation") {
    const SystemParams p = table_params();
    CHECK_NOTHROW(Scenario::homogeneous(10.0).require_valid(p));
    CHECK_THROWS_AS(Scenario::homogeneous(1.0).require_valid(p), std::invalid_argument);
    CHECK_THROWS_AS(Scenario::homogeneous(31.0).require_valid(p), std::invalid_argument);
    CHECK_NOTHROW(Scenario::heterogeneous().require_valid(p));
}
