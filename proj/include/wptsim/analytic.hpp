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

#ifndef WPTSIM_ANALYTIC_HPP
#define WPTSIM_ANALYTIC_HPP

#include <cstdint>

#include "wptsim/channel.hpp"
#include "wptsim/core.hpp"

namespace wptsim {

/// PDF/CDF pair of one distribution evaluated at a point.
struct DensityPoint {
    double pdf = 0.0; ///< per watt
    double cdf = 0.0;
};

/// Normalizing constants of a limiting extreme-value law. Gumbel carries
/// (a1, b1); Frechet carries (b2, shape) with shape = 2/alpha.
enum class LimitKind { gumbel, frechet };
struct EvtParams {
    LimitKind kind = LimitKind::gumbel;
    double a1 = 0.0;    ///< Gumbel position [W]
    double b1 = 0.0;    ///< Gumbel scale [W]
    double b2 = 0.0;    ///< Frechet scale [W]
    double shape = 0.0; ///< Frechet tail index 2/alpha
};

/// Exponential tail rates of the heterogeneous power distribution:
/// r1 = r_ex^alpha/(c*beta*sigma_h2) and r2 = r_net^alpha/(c*beta*sigma_h2),
/// in 1/W. r1 governs the far tail (closest possible user), r2 the body.
struct HetTailConstants {
    double r1 = 0.0;
    double r2 = 0.0;
};
HetTailConstants het_tail_constants(const SystemParams& p);

// --- homogeneous scenario ---------------------------------------------------

/// Exponential law of the instantaneous output DC power at fixed distance d:
/// rate d^alpha/(c*beta*sigma_h2).
DensityPoint hom_power_pdf_cdf(double x, const SystemParams& p, double d);

/// Round-robin average c*beta*sigma_h2*d^(-alpha) [W]. d must lie in the
/// annulus.
double avg_rr_hom(const SystemParams& p, double d);

/// Gumbel normalizing constants of the maximum over n users:
/// a1 = scale*ln(n), b1 = scale with scale = c*beta*sigma_h2*d^(-alpha).
EvtParams gumbel_constants(const SystemParams& p, double d, std::uint64_t n);

/// Large-n mean of the opportunistic maximum, scale*(ln n + euler_gamma).
double avg_os_hom_asymptotic(const SystemParams& p, double d, std::uint64_t n);

/// Exact finite-n mean of the opportunistic maximum: the maximum of n i.i.d.
/// exponentials has mean scale*H_n.
double avg_os_hom_exact(const SystemParams& p, double d, std::uint64_t n);

// --- heterogeneous scenario -------------------------------------------------

/// CDF of the instantaneous output DC power when the user distance is
/// uniform over the annulus. Defined for x > 0; tends to 0 as x -> 0+.
double cdf_pout_het(double x, const SystemParams& p);

/// Survival function 1 - cdf_pout_het(x), formed without subtracting from 1
/// so the deep tail keeps full relative precision.
double survival_pout_het(double x, const SystemParams& p);

/// Density of the heterogeneous output power, obtained by differentiating
/// the CDF with d/dx Gamma(a, bx) = -b e^(-bx) (bx)^(a-1); the exponential
/// terms cancel, leaving
/// (2/alpha) * (K/x)^(2/alpha) * [Gamma(1+2/alpha, r1 x) -
/// Gamma(1+2/alpha, r2 x)] / (x * (r_net^2 - r_ex^2)), K = c*beta*sigma_h2.
double pdf_pout_het(double x, const SystemParams& p);

/// Round-robin average over the annulus,
/// 2*c*beta*sigma_h2*(r_ex^(2-alpha) - r_net^(2-alpha)) /
/// ((alpha-2)*(r_net^2 - r_ex^2)) [W].
double avg_rr_het(const SystemParams& p);

/// Wide-annulus approximation c*beta*sigma_h2*r_ex^(-alpha) *
/// (2/(alpha-2))*(r_ex/r_net)^2; exact for alpha = 4. Intended for
/// r_net >> r_ex (not enforced).
double avg_rr_het_approx(const SystemParams& p);

/// Distance at which a homogeneous deployment matches avg_rr_het_approx:
/// r_ex * [((alpha-2)/2) * (r_net/r_ex)^2]^(1/alpha) [m].
double equivalent_distance(const SystemParams& p);

/// Frechet normalizing scale of the maximum over n heterogeneous users:
/// b2 = n * avg_rr_het_approx, shape = 2/alpha. This is the enlarged scale
/// (denominator alpha-2); see frechet_scale_first_order for the plain one.
EvtParams frechet_scale(const SystemParams& p, std::uint64_t n);

/// Diagnostic: un-enlarged first-order scale with denominator alpha instead
/// of alpha-2, i.e. frechet_scale * (alpha-2)/alpha.
double frechet_scale_first_order(const SystemParams& p, std::uint64_t n);

/// Diagnostic: 1/n-quantile scale solved from the tail approximation,
/// r1*b*exp(r1*b) = (2n/alpha)*(r_ex/r_net)^2 (a Lambert-W style root).
double frechet_scale_quantile(const SystemParams& p, std::uint64_t n);

// --- limits, numeric means, diagnostics --------------------------------------

/// Limiting CDF: Gumbel exp(-exp(-(x-a1)/b1)) or Frechet
/// exp(-(x/b2)^(-shape)) (0 for x <= 0).
double limiting_cdf(const EvtParams& params, double x);

/// Finite-n mean of the heterogeneous opportunistic maximum by adaptive
/// quadrature of n*x*f(x)*F(x)^(n-1) over (0, inf), mapped to (0,1) through
/// the known tail rate r1. Relative error <= rel_tol (>= 1e-10).
double mean_os_het_numeric(const SystemParams& p, std::uint64_t n, double rel_tol);

/// Extreme-value domain diagnostic. Homogeneous: the hazard f/(1-F), which
/// is identically d^alpha/(c*beta*sigma_h2). Heterogeneous: x*f/(1-F) with f
/// from central differences of the CDF (step max(1e-6*x, 1e-12)); values
/// near 2/alpha indicate the Frechet-type regime, growth at large x the
/// exponential cutoff.
double von_mises_diagnostic(const SystemParams& p, const Scenario& scenario, double x);

/// Asymptotic heterogeneous tail (2/alpha)*(r_ex/r_net)^2*exp(-r1*x)/(r1*x).
/// Valid for r1*x >= 1; outside that regime the value is still returned with
/// the flag cleared.
struct TailApprox {
    double value = 0.0;
    bool asymptotic_regime = true;
};
TailApprox tail_approx_het(double x, const SystemParams& p);

} // namespace wptsim

#endif // WPTSIM_ANALYTIC_HPP
