#include "levyfluct/fluctuation.hpp"

#include <cmath>
#include <string>

namespace levyfluct {

namespace {

constexpr double kClamp = 1e-9;

double as_probability(double p, const char* what) {
    if (!std::isfinite(p) || p < -kClamp || p > 1.0 + kClamp)
        throw ConsistencyError(std::string(what) + ": value " + std::to_string(p) +
                               " is not a probability");
    return std::min(1.0, std::max(0.0, p));
}

void require_q(const ScaleEvaluator& ev, double q, const char* what) {
    if (ev.q() != q) throw ArgumentError(std::string(what) + ": evaluator has wrong q");
}

void require_gamma(const ScaleEvaluator& ev, const char* what) {
    if (ev.q() <= 0.0) throw ArgumentError(std::string(what) + ": evaluator needs q > 0");
}

} // namespace

double two_sided_exit_up(const ScaleEvaluator& w0, double x, double y) {
    require_q(w0, 0.0, "two_sided_exit_up");
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("two_sided_exit_up requires x, y > 0");
    return as_probability(w0.W(x) / w0.W(x + y), "two_sided_exit_up");
}

double maxloss_passage_cdf(const ScaleEvaluator& w0, double u, double beta) {
    require_q(w0, 0.0, "maxloss_passage_cdf");
    if (!(u > 0.0) || !(beta > 0.0))
        throw DomainError("maxloss_passage_cdf requires u, beta > 0");
    return as_probability(std::exp(-beta * w0.excursion_rate(u)), "maxloss_passage_cdf");
}

double joint_maxloss_inf_cdf(const ScaleEvaluator& w0, double u, double alpha_level,
                             double beta) {
    require_q(w0, 0.0, "joint_maxloss_inf_cdf");
    if (!(u > 0.0) || !(alpha_level > 0.0) || !(beta > 0.0))
        throw DomainError("joint_maxloss_inf_cdf requires u, alpha, beta > 0");
    double p;
    if (u < alpha_level) {
        p = std::exp(-beta * w0.excursion_rate(u));
    } else if (u <= alpha_level + beta) {
        // middle branch, inclusive at both edges; continuous with neighbours
        p = w0.W(alpha_level) / w0.W(u) *
            std::exp(-(beta + alpha_level - u) * w0.excursion_rate(u));
    } else {
        p = w0.W(alpha_level) / w0.W(alpha_level + beta);
    }
    return as_probability(p, "joint_maxloss_inf_cdf");
}

double joint_maxloss_maxgain_passage_cdf(const ScaleEvaluator& w0, double u, double v,
                                         double beta) {
    require_q(w0, 0.0, "joint_maxloss_maxgain_passage_cdf");
    if (!(beta > 0.0) || u < 0.0) throw DomainError("requires beta > 0 and u >= 0");
    if (v < beta) throw ArgumentError("joint_maxloss_maxgain_passage_cdf requires v >= beta");
    // The max gain strictly exceeds beta, and the max loss is strictly
    // positive for the non-monotone paths in scope.
    if (v == beta || u == 0.0) return 0.0;
    return joint_maxloss_inf_cdf(w0, u, v - beta, beta);
}

double maxloss_exp_tail(const ScaleEvaluator& wg, double a) {
    require_gamma(wg, "maxloss_exp_tail");
    if (!(a > 0.0)) throw DomainError("maxloss_exp_tail requires a > 0");
    const double w = wg.W(a);
    const double p = wg.Z(a) - wg.q() * w * w / wg.W_right_derivative(a);
    return as_probability(p, "maxloss_exp_tail");
}

double maxgain_exp_tail(const ScaleEvaluator& wg, double a) {
    require_gamma(wg, "maxgain_exp_tail");
    if (!(a > 0.0)) throw DomainError("maxgain_exp_tail requires a > 0");
    return as_probability(1.0 / wg.Z(a), "maxgain_exp_tail");
}

double sup_inf_joint(const ScaleEvaluator& wg, double a, double b) {
    require_gamma(wg, "sup_inf_joint");
    if (!(a < 0.0) || !(b > 0.0)) throw DomainError("sup_inf_joint requires a < 0 < b");
    const double p = 1.0 - wg.Z(-a) + (wg.Z(b - a) - 1.0) * wg.W(-a) / wg.W(b - a);
    return as_probability(p, "sup_inf_joint");
}

double tilted_exponent(const LevyModel& model, double lambda, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("tilted_exponent requires gamma > 0");
    const double shift = phi(model, gamma);
    if (lambda < -shift) throw DomainError("tilted_exponent requires lambda >= -phi(gamma)");
    return laplace_exponent(model, lambda + shift) - gamma;
}

double h_function(const ScaleEvaluator& wg, double x_minus_a) {
    require_gamma(wg, "h_function");
    if (!(x_minus_a > 0.0)) throw DomainError("h_function requires x - a > 0");
    // gamma * integral of W^(g) equals Z^(g) - 1, which reuses the Z quadrature.
    const double p = wg.q() * wg.W(x_minus_a) / wg.phi_q() - (wg.Z(x_minus_a) - 1.0);
    return as_probability(p, "h_function");
}

double sup_exp_density_rate(const LevyModel& model, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("sup_exp_density_rate requires gamma > 0");
    return phi(model, gamma);
}

double two_sided_exit_up(const LevyModel& model, double x, double y) {
    return two_sided_exit_up(ScaleEvaluator(model, 0.0), x, y);
}
double maxloss_passage_cdf(const LevyModel& model, double u, double beta) {
    return maxloss_passage_cdf(ScaleEvaluator(model, 0.0), u, beta);
}
double joint_maxloss_inf_cdf(const LevyModel& model, double u, double alpha_level, double beta) {
    return joint_maxloss_inf_cdf(ScaleEvaluator(model, 0.0), u, alpha_level, beta);
}
double joint_maxloss_maxgain_passage_cdf(const LevyModel& model, double u, double v,
                                         double beta) {
    return joint_maxloss_maxgain_passage_cdf(ScaleEvaluator(model, 0.0), u, v, beta);
}
double maxloss_exp_tail(const LevyModel& model, double a, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("maxloss_exp_tail requires gamma > 0");
    return maxloss_exp_tail(ScaleEvaluator(model, gamma), a);
}
double maxgain_exp_tail(const LevyModel& model, double a, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("maxgain_exp_tail requires gamma > 0");
    return maxgain_exp_tail(ScaleEvaluator(model, gamma), a);
}
double sup_inf_joint(const LevyModel& model, double a, double b, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("sup_inf_joint requires gamma > 0");
    return sup_inf_joint(ScaleEvaluator(model, gamma), a, b);
}
double h_function(const LevyModel& model, double x_minus_a, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("h_function requires gamma > 0");
    return h_function(ScaleEvaluator(model, gamma), x_minus_a);
}

} // namespace levyfluct
