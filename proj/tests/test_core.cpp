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

#include <cstdio>
#include <string>

#include "helpers.hpp"
#include "wptsim/core.hpp"

using namespace wptsim;
using wptsim::test::rel_diff;
using wptsim::test::table_params;

TEST_CASE("dbm_to_watts reference points") {
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_diff(dbm_to_watts(53.0), 199.526231497) < 1e-11);
    CHECK(rel_diff(dbm_to_watts(43.0), 19.9526231497) < 1e-11);
    CHECK_THROWS_AS(dbm_to_watts(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("dbm/watts round trip over [-50, 80] dBm") {
    for (double x = -50.0; x <= 80.0; x += 0.5) {
        CHECK(std::abs(watts_to_dbm(dbm_to_watts(x)) - x) < 1e-12);
    }
    CHECK_THROWS_AS(watts_to_dbm(0.0), std::domain_error);
    CHECK_THROWS_AS(watts_to_dbm(-1.0), std::domain_error);
}

TEST_CASE("rectifier_constant reference values") {
    SystemParams ones;
    ones.xi = 1.0;
    ones.i_s = 1.0;
    ones.rho = 1.0;
    ones.v_t = 1.0;
    ones.p_erp = 1.0;
    CHECK(rectifier_constant(ones) == 1.0);

    const SystemParams p100 = table_params(100.0);
    CHECK(rel_diff(rectifier_constant(p100), 102.1238762619057) < 1e-12);
    // direct evaluation of the defining product as an independent route
    CHECK(rel_diff(rectifier_constant(p100), 0.85 * 1e-3 * 100.0 / (0.02885 * 0.02885)) < 1e-15);

    const SystemParams p1 = table_params(1.0);
    CHECK(rel_diff(rectifier_constant(p1), 1.021238762619057) < 1e-12);
}

TEST_CASE("rectifier_constant is linear in p_erp") {
    const SystemParams base = table_params(25.0);
    for (double k : {2.0, 4.0, 8.0, 0.5}) { // powers of two scale exactly
        SystemParams scaled = base;
        scaled.p_erp = base.p_erp * k;
        CHECK(rectifier_constant(scaled) == k * rectifier_constant(base));
    }
    for (double k : {3.0, 10.0, 7.25}) {
        SystemParams scaled = base;
        scaled.p_erp = base.p_erp * k;
        CHECK(rel_diff(rectifier_constant(scaled), k * rectifier_constant(base)) < 1e-15);
    }
}

TEST_CASE("power_density reference points match to three significant figures") {
    struct Point {
        double d;
        const char* expected;
    };
    const Point points[] = {{2.0, "3.98"}, {10.0, "0.159"}, {30.0, "0.0177"}};
    for (const auto& pt : points) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3g", power_density(200.0, pt.d));
        CHECK(std::string(buf) == pt.expected);
    }
    CHECK_THROWS_AS(power_density(200.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(power_density(200.0, -3.0), std::domain_error);
}

TEST_CASE("power density stays below the 10 W/m^2 exposure bound in the annulus") {
    for (double p_dbm = 43.0; p_dbm <= 53.0; p_dbm += 1.0) {
        for (double d = 2.0; d <= 30.0; d += 0.5) {
            CHECK(power_density(dbm_to_watts(p_dbm), d) < 10.0);
        }
    }
    CHECK(power_density(200.0, 2.0) < 10.0);
}

TEST_CASE("SystemParams validation lists every violation") {
    CHECK(table_params().validate().empty());

    SystemParams bad = table_params();
    bad.r_ex = 40.0;
    bad.r_net = 30.0;
    auto violations = bad.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("0 < r_ex < r_net") != std::string::npos);

    SystemParams alpha2 = table_params();
    alpha2.alpha = 2.0;
    violations = alpha2.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("(alpha - 2)") != std::string::npos);

    SystemParams multi = table_params();
    multi.alpha = 1.5;
    multi.xi = 0.0;
    multi.i_s = -1.0;
    CHECK(multi.validate().size() == 3);
    CHECK_THROWS_AS(multi.require_valid(), std::invalid_argument);
}
