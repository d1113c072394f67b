#pragma once

#include "levyfluct/scale.hpp"

namespace levyfluct {

// Distributions of maximum loss (drawdown), maximum gain (drawup), supremum
// and infimum of a spectrally negative Levy process, stopped either at the
// first passage above a level or at an independent exponential time. All are
// expressed through the scale functions W^(q), Z^(q).
//
// Raw values outside [0,1] by at most 1e-9 are clamped (inversion noise);
// anything worse raises ConsistencyError instead of being masked.

/// P{ the process leaves [-x, y] at the top } = W(x) / W(x + y).
double two_sided_exit_up(const ScaleEvaluator& w0, double x, double y);
double two_sided_exit_up(const LevyModel& model, double x, double y);

/// P{ max loss up to passage above beta <= u } = exp(-beta W'(u)/W(u)).
double maxloss_passage_cdf(const ScaleEvaluator& w0, double u, double beta);
double maxloss_passage_cdf(const LevyModel& model, double u, double beta);

/// P{ max loss <= u and infimum >= -alpha, up to passage above beta }.
/// Three-branch formula; the middle branch covers u in [alpha, alpha + beta]
/// inclusive and agrees with its neighbours at both edges.
double joint_maxloss_inf_cdf(const ScaleEvaluator& w0, double u, double alpha_level,
                             double beta);
double joint_maxloss_inf_cdf(const LevyModel& model, double u, double alpha_level, double beta);

/// P{ max loss <= u and max gain <= v, up to passage above beta }, v >= beta.
/// Identical to joint_maxloss_inf_cdf with alpha = v - beta; v = beta gives 0
/// since the max gain strictly exceeds beta.
double joint_maxloss_maxgain_passage_cdf(const ScaleEvaluator& w0, double u, double v,
                                         double beta);
double joint_maxloss_maxgain_passage_cdf(const LevyModel& model, double u, double v, double beta);

/// P{ max loss up to an exp(gamma) time > a }
///   = Z^(g)(a) - g W^(g)(a)^2 / W^(g)'_+(a).
double maxloss_exp_tail(const ScaleEvaluator& wg, double a);
double maxloss_exp_tail(const LevyModel& model, double a, double gamma);

/// P{ max gain up to an exp(gamma) time > a } = 1 / Z^(g)(a).
double maxgain_exp_tail(const ScaleEvaluator& wg, double a);
double maxgain_exp_tail(const LevyModel& model, double a, double gamma);

/// P{ a < inf and sup < b at an exp(gamma) time }, a < 0 < b:
///   1 - Z^(g)(-a) + [Z^(g)(b-a) - 1] W^(g)(-a) / W^(g)(b-a).
double sup_inf_joint(const ScaleEvaluator& wg, double a, double b);
double sup_inf_joint(const LevyModel& model, double a, double b, double gamma);

/// Exponent of the tilted (pre-supremum) process:
///   psi_bar(lambda) = psi(lambda + phi(gamma)) - gamma, lambda >= -phi(gamma).
double tilted_exponent(const LevyModel& model, double lambda, double gamma);

/// P{ exp(gamma) clock rings before the path drops x_minus_a below its start }
///   = gamma W^(g)(y)/phi(gamma) - gamma * integral of W^(g) over [0, y].
double h_function(const ScaleEvaluator& wg, double x_minus_a);
double h_function(const LevyModel& model, double x_minus_a, double gamma);

/// Rate of the exponential law of the supremum at an exp(gamma) time: phi(gamma).
double sup_exp_density_rate(const LevyModel& model, double gamma);

} // namespace levyfluct
