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

#include "wptsim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wptsim/quadrature.hpp"
#include "wptsim/special_functions.hpp"

namespace wptsim {

namespace {

double power_scale(const SystemParams& p) { return rectifier_constant(p) * p.beta * p.sigma_h2; }

void check_annulus(const SystemParams& p, double d) {
    if (!(d >= p.r_ex && d <= p.r_net))
        throw std::domain_error("distance outside the annulus [r_ex, r_net]");
}

void check_alpha(const SystemParams& p) {
    if (!(p.alpha > 2.0)) throw std::domain_error("alpha > 2 required by the (alpha-2) divisor");
}

} // namespace

HetTailConstants het_tail_constants(const SystemParams& p) {
    const double k = power_scale(p);
    return {std::pow(p.r_ex, p.alpha) / k, std::pow(p.r_net, p.alpha) / k};
}

DensityPoint hom_power_pdf_cdf(double x, const SystemParams& p, double d) {
    if (!(x >= 0.0)) throw std::domain_error("hom_power_pdf_cdf: x must be >= 0");
    const double rate = std::pow(d, p.alpha) / power_scale(p);
    const double e = std::exp(-rate * x);
    return {rate * e, 1.0 - e};
}

double avg_rr_hom(const SystemParams& p, double d) {
    check_annulus(p, d);
    return power_scale(p) * std::pow(d, -p.alpha);
}

EvtParams gumbel_constants(const SystemParams& p, double d, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("gumbel_constants: n >= 1 required");
    const double scale = power_scale(p) * std::pow(d, -p.alpha);
    EvtParams out;
    out.kind = LimitKind::gumbel;
    out.a1 = scale * std::log(static_cast<double>(n));
    out.b1 = scale;
    return out;
}

double avg_os_hom_asymptotic(const SystemParams& p, double d, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("avg_os_hom_asymptotic: n >= 1 required");
    const double scale = power_scale(p) * std::pow(d, -p.alpha);
    return scale * (std::log(static_cast<double>(n)) + euler_gamma);
}

double avg_os_hom_exact(const SystemParams& p, double d, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("avg_os_hom_exact: n >= 1 required");
    return power_scale(p) * std::pow(d, -p.alpha) * harmonic_number(n);
}

double survival_pout_het(double x, const SystemParams& p) {
    if (!(x > 0.0)) throw std::domain_error("survival_pout_het: x must be > 0");
    const auto [r1, r2] = het_tail_constants(p);
    const double k = power_scale(p);
    const double s = 2.0 / p.alpha;
    const double span = p.r_net * p.r_net - p.r_ex * p.r_ex;
    const double exp_part =
        (p.r_net * p.r_net * std::exp(-r2 * x) - p.r_ex * p.r_ex * std::exp(-r1 * x)) / span;
    const double gamma_part =
        std::pow(k / x, s) * upper_incomplete_gamma_diff(1.0 + s, r1 * x, r2 * x) / span;
    return std::clamp(exp_part + gamma_part, 0.0, 1.0);
}

double cdf_pout_het(double x, const SystemParams& p) { return 1.0 - survival_pout_het(x, p); }

double pdf_pout_het(double x, const SystemParams& p) {
    if (!(x > 0.0)) throw std::domain_error("pdf_pout_het: x must be > 0");
    const auto [r1, r2] = het_tail_constants(p);
    const double k = power_scale(p);
    const double s = 2.0 / p.alpha;
    const double span = p.r_net * p.r_net - p.r_ex * p.r_ex;
    return s * std::pow(k / x, s) * upper_incomplete_gamma_diff(1.0 + s, r1 * x, r2 * x) /
           (x * span);
}

double avg_rr_het(const SystemParams& p) {
    check_alpha(p);
    const double span = p.r_net * p.r_net - p.r_ex * p.r_ex;
    return 2.0 * power_scale(p) *
           (std::pow(p.r_ex, 2.0 - p.alpha) - std::pow(p.r_net, 2.0 - p.alpha)) /
           ((p.alpha - 2.0) * span);
}

double avg_rr_het_approx(const SystemParams& p) {
    check_alpha(p);
    const double ratio = p.r_ex / p.r_net;
    return power_scale(p) * std::pow(p.r_ex, -p.alpha) * (2.0 / (p.alpha - 2.0)) * ratio * ratio;
}

double equivalent_distance(const SystemParams& p) {
    check_alpha(p);
    const double t3 = std::pow(
        0.5 * (p.alpha - 2.0) * (p.r_net / p.r_ex) * (p.r_net / p.r_ex), 1.0 / p.alpha);
    return p.r_ex * t3;
}

EvtParams frechet_scale(const SystemParams& p, std::uint64_t n) {
    check_alpha(p);
    if (n < 1) throw std::invalid_argument("frechet_scale: n >= 1 required");
    EvtParams out;
    out.kind = LimitKind::frechet;
    out.b2 = static_cast<double>(n) * avg_rr_het_approx(p);
    out.shape = 2.0 / p.alpha;
    return out;
}

double frechet_scale_first_order(const SystemParams& p, std::uint64_t n) {
    return frechet_scale(p, n).b2 * (p.alpha - 2.0) / p.alpha;
}

double frechet_scale_quantile(const SystemParams& p, std::uint64_t n) {
    check_alpha(p);
    if (n < 1) throw std::invalid_argument("frechet_scale_quantile: n >= 1 required");
    const double ratio = p.r_ex / p.r_net;
    const double z = (2.0 * static_cast<double>(n) / p.alpha) * ratio * ratio;
    // Solve w*e^w = z by Newton iteration; w0 = z is a contraction start for
    // z > 0 of this size.
    double w = z < 1.0 ? z : std::log(z);
    for (int i = 0; i < 100; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        const double step = f / (ew * (1.0 + w));
        w -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(w))) break;
    }
    return w / het_tail_constants(p).r1;
}

double limiting_cdf(const EvtParams& params, double x) {
    if (params.kind == LimitKind::gumbel) {
        if (!(params.b1 > 0.0)) throw std::domain_error("limiting_cdf: b1 must be > 0");
        return std::exp(-std::exp(-(x - params.a1) / params.b1));
    }
    if (!(params.b2 > 0.0 && params.shape > 0.0))
        throw std::domain_error("limiting_cdf: b2 and shape must be > 0");
    if (x <= 0.0) return 0.0;
    return std::exp(-std::pow(x / params.b2, -params.shape));
}

double mean_os_het_numeric(const SystemParams& p, std::uint64_t n, double rel_tol) {
    check_alpha(p);
    if (n < 1) throw std::invalid_argument("mean_os_het_numeric: n >= 1 required");
    if (!(rel_tol >= 1e-10)) throw std::invalid_argument("mean_os_het_numeric: rel_tol >= 1e-10");
    const auto [r1, r2] = het_tail_constants(p);
    const double nn = static_cast<double>(n);
    auto integrand = [&](double x) {
        double v = nn * x * pdf_pout_het(x, p);
        if (n > 1) v *= std::pow(cdf_pout_het(x, p), nn - 1.0);
        return v;
    };
    return integrate_exponential_tail(integrand, r1, rel_tol, 0.0, 8000).value;
}

double von_mises_diagnostic(const SystemParams& p, const Scenario& scenario, double x) {
    if (!(x > 0.0)) throw std::domain_error("von_mises_diagnostic: x must be > 0");
    if (scenario.kind == ScenarioKind::homogeneous) {
        check_annulus(p, scenario.d_fixed);
        // Exponential hazard: the ratio f/(1-F) is the rate itself.
        return std::pow(scenario.d_fixed, p.alpha) / power_scale(p);
    }
    const double h = std::max(1e-6 * x, 1e-12);
    if (!(x - h > 0.0))
        throw std::domain_error("von_mises_diagnostic: x too small for the difference step");
    // Central difference of the survival function; differencing the CDF
    // directly would lose the tail to 1-F cancellation.
    const double f_fd = (survival_pout_het(x - h, p) - survival_pout_het(x + h, p)) / (2.0 * h);
    const double surv = survival_pout_het(x, p);
    if (!(surv > 0.0) || !std::isfinite(f_fd))
        throw std::runtime_error("von_mises_diagnostic: numeric derivative failed");
    return x * f_fd / surv;
}

TailApprox tail_approx_het(double x, const SystemParams& p) {
    check_alpha(p);
    if (!(x > 0.0)) throw std::domain_error("tail_approx_het: x must be > 0");
    const double r1 = het_tail_constants(p).r1;
    const double z = r1 * x;
    const double ratio = p.r_ex / p.r_net;
    return {(2.0 / p.alpha) * ratio * ratio * std::exp(-z) / z, z >= 1.0};
}

} // namespace wptsim
