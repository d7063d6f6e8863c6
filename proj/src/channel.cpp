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

#include "wptsim/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wptsim {

void Scenario::require_valid(const SystemParams& p) const {
    if (kind == ScenarioKind::homogeneous) {
        if (!(d_fixed >= p.r_ex && d_fixed <= p.r_net))
            throw std::invalid_argument("scenario: homogeneous distance d=" +
                                        std::to_string(d_fixed) + " outside annulus [" +
                                        std::to_string(p.r_ex) + ", " + std::to_string(p.r_net) +
                                        "]");
    }
}

double sample_fading_gain(double uniform_draw, double sigma_h2) {
    if (!(uniform_draw > 0.0 && uniform_draw < 1.0))
        throw std::domain_error("sample_fading_gain: uniform draw must be in (0,1)");
    return -sigma_h2 * std::log1p(-uniform_draw);
}

double sample_distance_annulus(double uniform_draw, double r_ex, double r_net) {
    if (!(r_ex > 0.0 && r_ex < r_net))
        throw std::invalid_argument("sample_distance_annulus: need 0 < r_ex < r_net");
    if (!(uniform_draw >= 0.0 && uniform_draw <= 1.0))
        throw std::domain_error("sample_distance_annulus: uniform draw must be in [0,1]");
    return std::sqrt(r_ex * r_ex + uniform_draw * (r_net * r_net - r_ex * r_ex));
}

double channel_gain(double beta, double d, double alpha, double h2) {
    if (!(d > 0.0)) throw std::domain_error("channel_gain: distance must be > 0");
    return beta * std::pow(d, -alpha) * h2;
}

double instantaneous_dc_power(double c, double beta, double d, double alpha, double h2) {
    return c * channel_gain(beta, d, alpha, h2);
}

double receive_amplitude(double p_erp, double gain) {
    return std::sqrt(p_erp * gain);
}

} // namespace wptsim
