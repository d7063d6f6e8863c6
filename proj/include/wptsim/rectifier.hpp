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

#ifndef WPTSIM_RECTIFIER_HPP
#define WPTSIM_RECTIFIER_HPP

namespace wptsim {

/// Schottky diode small-signal parameters.
struct DiodeParams {
    double i_s = 1.0e-3;  ///< reverse saturation current [A]
    double rho = 1.0;     ///< quality factor, >= 1
    double v_t = 0.02885; ///< thermal voltage [V]
};

/// Exponential diode law i_s * (exp(v/(rho*v_t)) - 1).
double diode_current(double v, const DiodeParams& dp);

/// Taylor truncation of the diode law about v = 0:
/// sum_{k=1..order} i_s * (v/(rho*v_t))^k / k!.
double truncated_series_current(double v, const DiodeParams& dp, int order);

/// Series truncation with unit coefficients, sum_{k=1..order}
/// i_s * (v/(rho*v_t))^k. This is the coefficient convention behind the
/// rectifier DC model: its k=2 term applied to a sinusoid of envelope A
/// averages to exactly i_s*A^2/(rho*v_t)^2, i.e. rectified_dc_current. The
/// factorial form above differs by 1/2 at k=2.
double truncated_series_current_unit_coeffs(double v, const DiodeParams& dp, int order);

/// DC component left after low-pass filtering the order-2 rectified
/// sinusoid: i_s * a^2 / (rho*v_t)^2.
double rectified_dc_current(double a, const DiodeParams& dp);

/// Numeric check of the low-pass-filter step: averages
/// truncated_series_current_unit_coeffs over one full carrier period of
/// v(theta) = sqrt(2)*a*cos(theta), sampled at `samples_per_period` nodes
/// (>= 64). For order 2 this reproduces rectified_dc_current up to
/// quadrature roundoff; odd orders average to zero.
double lpf_dc_oracle(double a, const DiodeParams& dp, int order, int samples_per_period);

/// Battery-side conversion: stored DC power xi * i_dc [W].
double output_dc_power(double i_dc, double xi);

} // namespace wptsim

#endif // WPTSIM_RECTIFIER_HPP
