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

#include "wptsim/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace wptsim {

namespace {

void check_domain(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("incomplete gamma: a must be > 0");
    if (!(x >= 0.0)) throw std::domain_error("incomplete gamma: x must be >= 0");
}

// Power series for the lower function:
// gamma(a,x) = x^a e^-x sum_{n>=0} x^n / (a (a+1) ... (a+n)).
double lower_series(double a, double x) {
    if (x == 0.0) return 0.0;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 1000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    return std::exp(-x + a * std::log(x)) * sum;
}

// Modified-Lentz continued fraction for the upper function, valid and fast
// for x >= a + 1. Returns Gamma(a,x) directly (unnormalized).
double upper_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x)) * h;
}

} // namespace

double lower_incomplete_gamma(double a, double x) {
    check_domain(a, x);
    if (x < a + 1.0) return lower_series(a, x);
    return std::tgamma(a) - upper_cf(a, x);
}

double upper_incomplete_gamma(double a, double x) {
    check_domain(a, x);
    if (x == 0.0) return std::tgamma(a);
    if (x < a + 1.0) return std::tgamma(a) - lower_series(a, x);
    return upper_cf(a, x);
}

double upper_incomplete_gamma_diff(double a, double x1, double x2) {
    check_domain(a, x1);
    check_domain(a, x2);
    if (x1 > x2) throw std::invalid_argument("upper_incomplete_gamma_diff: need x1 <= x2");
    if (x2 < a + 1.0) return lower_series(a, x2) - lower_series(a, x1);
    return upper_incomplete_gamma(a, x1) - upper_incomplete_gamma(a, x2);
}

double harmonic_number(std::uint64_t n) {
    // Summing smallest-first keeps the roundoff of long sums down.
    double h = 0.0;
    for (std::uint64_t k = n; k >= 1; --k) h += 1.0 / static_cast<double>(k);
    return h;
}

} // namespace wptsim
