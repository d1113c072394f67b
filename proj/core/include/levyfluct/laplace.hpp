#pragma once

#include <complex>
#include <functional>

#include "levyfluct/errors.hpp"

namespace levyfluct {

enum class InversionMethod { FixedTalbot, GaverStehfest };

/// Image function F(lambda) together with everything needed to invert it.
/// The callable must be the analytic continuation of the transform; the fixed
/// Talbot contour evaluates it at complex points, Gaver-Stehfest at real ones.
struct TransformSpec {
    std::function<std::complex<double>(std::complex<double>)> transform;
    /// Real part of the rightmost singularity (phi(q) for scale functions).
    double abscissa = 0.0;
    InversionMethod method = InversionMethod::FixedTalbot;
    int talbot_nodes = 32;    // even, in [16, 64]
    int stehfest_terms = 16;  // even, <= 18 in double precision
    /// When set, both methods are run and compared; disagreement beyond
    /// cross_check_tol (relative) raises NonConvergence.
    bool cross_check = false;
    double cross_check_tol = 1e-4;
};

/// Evaluate the original function at x > 0.
///
/// The Talbot contour parameter is kept right of the abscissa by the margin
/// 0.1 * max(1, abscissa) + 1 (empirical against the oracle transform set;
/// see tests). Gaver-Stehfest translates the transform so its rightmost
/// singularity sits at the origin and rescales by exp(abscissa * x).
double invert(const TransformSpec& spec, double x);

/// Right derivative estimate by a one-sided 3-point finite difference with
/// step h = max(step_hint, 1e-6 * max(1, x)), using only points >= x.
double invert_derivative(const TransformSpec& spec, double x, double step_hint);

/// Derivative by differentiating the inversion integrand on the (frozen)
/// Talbot contour; far more accurate than the finite difference when the
/// method is FixedTalbot. Falls back to invert_derivative otherwise.
double invert_derivative_contour(const TransformSpec& spec, double x);

} // namespace levyfluct
