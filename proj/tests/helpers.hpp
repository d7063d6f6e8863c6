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

#ifndef WPTSIM_TESTS_HELPERS_HPP
#define WPTSIM_TESTS_HELPERS_HPP

#include <cmath>

#include "wptsim/core.hpp"

namespace wptsim::test {

inline double rel_diff(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

/// Standard reference setting: annulus 2..30 m, alpha 4, Schottky diode with
/// i_s = 1 mA, v_t = 28.85 mV, xi = 0.85.
inline SystemParams table_params(double p_erp_w = 100.0) {
    SystemParams p;
    p.p_erp = p_erp_w;
    return p;
}

} // namespace wptsim::test

#endif // WPTSIM_TESTS_HELPERS_HPP
