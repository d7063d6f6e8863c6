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

#ifndef WPTSIM_CHANNEL_HPP
#define WPTSIM_CHANNEL_HPP

#include "wptsim/core.hpp"

namespace wptsim {

enum class ScenarioKind { homogeneous, heterogeneous };

/// User placement model. Homogeneous users share one fixed distance;
/// heterogeneous users are re-placed uniformly over the annulus
/// [r_ex, r_net] independently per user and per slot.
struct Scenario {
    ScenarioKind kind = ScenarioKind::homogeneous;
    double d_fixed = 10.0; ///< [m], meaningful only for the homogeneous kind

    static Scenario homogeneous(double d_m) { return {ScenarioKind::homogeneous, d_m}; }
    static Scenario heterogeneous() { return {ScenarioKind::heterogeneous, 0.0}; }

    /// Checks the placement against the annulus of `p`; throws on violation.
    void require_valid(const SystemParams& p) const;
};

/// Inverse-CDF sample of the Rayleigh-fading power gain |h|^2, which is
/// exponential with mean sigma_h2. The draw must lie strictly inside (0, 1).
double sample_fading_gain(double uniform_draw, double sigma_h2);

/// Inverse-CDF sample of the distance of a user placed uniformly over the
/// annulus: sqrt(r_ex^2 + u*(r_net^2 - r_ex^2)), u in [0, 1].
double sample_distance_annulus(double uniform_draw, double r_ex, double r_net);

/// Instantaneous multiplicative channel gain beta * d^(-alpha) * h2.
double channel_gain(double beta, double d, double alpha, double h2);

/// Instantaneous output DC power c * beta * d^(-alpha) * h2 [W].
double instantaneous_dc_power(double c, double beta, double d, double alpha, double h2);

/// Envelope amplitude sqrt(p_erp * gain) of the received carrier. The
/// propagation and baseband phases cancel in the envelope, so they do not
/// appear here.
double receive_amplitude(double p_erp, double gain);

} // namespace wptsim

#endif // WPTSIM_CHANNEL_HPP
