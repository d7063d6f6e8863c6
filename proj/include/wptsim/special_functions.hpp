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

#ifndef WPTSIM_SPECIAL_FUNCTIONS_HPP
#define WPTSIM_SPECIAL_FUNCTIONS_HPP

#include <cstdint>

namespace wptsim {

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.5772156649015328606;

/// Upper incomplete gamma function Gamma(a, x) = int_x^inf t^(a-1) e^-t dt,
/// a > 0, x >= 0. Series expansion below x = a+1, continued fraction above;
/// relative error <= 1e-12 over the parameter range used here (a <= ~3).
double upper_incomplete_gamma(double a, double x);

/// Lower incomplete gamma function gamma(a, x) = Gamma(a) - Gamma(a, x),
/// evaluated by its power series (no cancellation for small x).
double lower_incomplete_gamma(double a, double x);

/// Difference Gamma(a, x1) - Gamma(a, x2) for x1 <= x2, routed through the
/// lower-series representation when both arguments are small so the
/// difference of two nearly equal upper tails is never formed.
double upper_incomplete_gamma_diff(double a, double x1, double x2);

/// n-th harmonic number sum_{k=1..n} 1/k.
double harmonic_number(std::uint64_t n);

} // namespace wptsim

#endif // WPTSIM_SPECIAL_FUNCTIONS_HPP
