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

#include "wptsim/rectifier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wptsim {

double diode_current(double v, const DiodeParams& dp) {
    if (!std::isfinite(v)) throw std::domain_error("diode_current: non-finite voltage");
    return dp.i_s * std::expm1(v / (dp.rho * dp.v_t));
}

double truncated_series_current(double v, const DiodeParams& dp, int order) {
    if (order < 1) throw std::invalid_argument("truncated_series_current: order >= 1 required");
    const double z = v / (dp.rho * dp.v_t);
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k <= order; ++k) {
        term *= z / static_cast<double>(k);
        sum += term;
    }
    return dp.i_s * sum;
}

double truncated_series_current_unit_coeffs(double v, const DiodeParams& dp, int order) {
    if (order < 1) throw std::invalid_argument("truncated_series_current: order >= 1 required");
    const double z = v / (dp.rho * dp.v_t);
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k <= order; ++k) {
        term *= z;
        sum += term;
    }
    return dp.i_s * sum;
}

double rectified_dc_current(double a, const DiodeParams& dp) {
    if (!(a >= 0.0)) throw std::domain_error("rectified_dc_current: amplitude must be >= 0");
    const double rv = dp.rho * dp.v_t;
    return dp.i_s * a * a / (rv * rv);
}

double lpf_dc_oracle(double a, const DiodeParams& dp, int order, int samples_per_period) {
    if (samples_per_period < 64)
        throw std::invalid_argument("lpf_dc_oracle: need >= 64 samples per period");
    const double amp = std::numbers::sqrt2 * a;
    double acc = 0.0;
    for (int j = 0; j < samples_per_period; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / samples_per_period;
        acc += truncated_series_current_unit_coeffs(amp * std::cos(theta), dp, order);
    }
    return acc / samples_per_period;
}

double output_dc_power(double i_dc, double xi) {
    if (!(i_dc >= 0.0)) throw std::domain_error("output_dc_power: current must be >= 0");
    if (!(xi > 0.0 && xi <= 1.0)) throw std::domain_error("output_dc_power: xi must be in (0,1]");
    return xi * i_dc;
}

} // namespace wptsim
