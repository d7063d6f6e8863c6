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

#ifndef WPTSIM_CORE_HPP
#define WPTSIM_CORE_HPP

#include <string>
#include <vector>

namespace wptsim {

/// Physical constants and geometry of one power-beacon deployment.
///
/// All quantities are SI (watts, meters, volts, amperes); dBm exists only at
/// the CLI boundary. Distances act as dimensionless multiples of 1 m inside
/// d^(-alpha); the reference-distance constant is absorbed into beta.
struct SystemParams {
    double r_ex = 2.0;       ///< exclusion-zone radius [m]
    double r_net = 30.0;     ///< coverage radius [m]
    double alpha = 4.0;      ///< path-loss exponent, must be > 2
    double beta = 1.0;       ///< channel scale factor
    double sigma_h2 = 1.0;   ///< mean multi-path power gain
    double xi = 0.85;        ///< DC conversion coefficient, in (0, 1]
    double i_s = 1.0e-3;     ///< diode reverse saturation current [A]
    double rho = 1.0;        ///< diode quality factor, >= 1
    double v_t = 0.02885;    ///< thermal voltage [V]
    double p_erp = 100.0;    ///< effective radiated power [W]

    /// Returns every violated constraint (empty means valid). Messages name
    /// the offending field and the constraint so they can be surfaced
    /// verbatim by config validation.
    [[nodiscard]] std::vector<std::string> validate() const;

    /// Throws std::invalid_argument listing all violations.
    void require_valid() const;
};

double dbm_to_watts(double p_dbm);
double watts_to_dbm(double p_watts);

/// Aggregate rectifier constant xi*i_s*p_erp/(rho*v_t)^2, in watts under the
/// dimensionless-distance convention. Linear in p_erp, xi and i_s.
double rectifier_constant(const SystemParams& p);

/// Radiated power density p_erp/(4*pi*d^2) at distance d, in W/m^2.
/// Throws std::domain_error for d <= 0.
double power_density(double p_erp_w, double distance_m);

} // namespace wptsim

#endif // WPTSIM_CORE_HPP
