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

#include "wptsim/core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wptsim {

std::vector<std::string> SystemParams::validate() const {
    std::vector<std::string> v;
    auto fail = [&v](const std::string& msg) { v.push_back(msg); };

    if (!(r_ex > 0.0 && r_ex < r_net))
        fail("params.r_ex/r_net: 0 < r_ex < r_net required (r_ex=" + std::to_string(r_ex) +
             ", r_net=" + std::to_string(r_net) + ")");
    if (!(alpha > 2.0))
        fail("params.alpha: alpha > 2 required; the average-power closed forms divide by "
             "(alpha - 2), so alpha = 2 is rejected rather than special-cased");
    if (!(beta > 0.0)) fail("params.beta: beta > 0 required");
    if (!(sigma_h2 > 0.0)) fail("params.sigma_h2: sigma_h2 > 0 required");
    if (!(xi > 0.0 && xi <= 1.0)) fail("params.xi: 0 < xi <= 1 required");
    if (!(i_s > 0.0)) fail("params.i_s: i_s > 0 required");
    if (!(rho >= 1.0)) fail("params.rho: rho >= 1 required");
    if (!(v_t > 0.0)) fail("params.v_t: v_t > 0 required");
    if (!(p_erp > 0.0)) fail("params.p_erp: p_erp > 0 required");
    return v;
}

void SystemParams::require_valid() const {
    const auto violations = validate();
    if (violations.empty()) return;
    std::ostringstream oss;
    oss << "invalid system parameters:";
    for (const auto& msg : violations) oss << "\n  - " << msg;
    throw std::invalid_argument(oss.str());
}

double dbm_to_watts(double p_dbm) {
    if (!std::isfinite(p_dbm)) throw std::domain_error("dbm_to_watts: non-finite input");
    return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

double watts_to_dbm(double p_watts) {
    if (!(p_watts > 0.0)) throw std::domain_error("watts_to_dbm: power must be > 0");
    return 10.0 * std::log10(p_watts) + 30.0;
}

double rectifier_constant(const SystemParams& p) {
    return p.xi * p.i_s * p.p_erp / ((p.rho * p.v_t) * (p.rho * p.v_t));
}

double power_density(double p_erp_w, double distance_m) {
    if (!(distance_m > 0.0)) throw std::domain_error("power_density: distance must be > 0");
    return p_erp_w / (4.0 * std::numbers::pi * distance_m * distance_m);
}

} // namespace wptsim
