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

#ifndef WPTSIM_QUADRATURE_HPP
#define WPTSIM_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace wptsim {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int segments = 0;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Globally adaptive Gauss-Kronrod (G7,K15) integration of f over the finite
/// interval [a, b]. Splits the segment with the largest error estimate until
/// the summed estimate drops below max(abs_tol, rel_tol * |integral|).
/// Throws QuadratureError if the budget of `max_segments` is exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol = 0.0, int max_segments = 2000);

/// Integral of g over (0, inf) for integrands with an exponential tail of
/// known rate: the substitution x = -ln(u)/rate maps the half line onto
/// (0, 1), where the transformed integrand is bounded.
QuadratureResult integrate_exponential_tail(const std::function<double(double)>& g, double rate,
                                            double rel_tol, double abs_tol = 0.0,
                                            int max_segments = 4000);

} // namespace wptsim

#endif // WPTSIM_QUADRATURE_HPP
