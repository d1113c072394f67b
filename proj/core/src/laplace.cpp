#include "levyfluct/laplace.hpp"

#include <cmath>
#include <vector>

namespace levyfluct {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const TransformSpec& spec, double x) {
    if (!spec.transform) throw ArgumentError("TransformSpec has no transform callable");
    if (!std::isfinite(spec.abscissa)) throw ArgumentError("TransformSpec abscissa must be finite");
    if (spec.talbot_nodes < 16 || spec.talbot_nodes > 64 || spec.talbot_nodes % 2 != 0)
        throw ArgumentError("talbot_nodes must be even and in [16, 64]");
    if (spec.stehfest_terms < 4 || spec.stehfest_terms > 18 || spec.stehfest_terms % 2 != 0)
        throw ArgumentError("stehfest_terms must be even and in [4, 18]");
    if (!std::isfinite(x) || x <= 0.0) throw DomainError("inversion requires x > 0");
}

// Contour crossing point: the Abate-Valko choice 2M/(5x), pushed right of the
// abscissa when the transform's singularities would otherwise sit too close.
double talbot_radius(const TransformSpec& spec, double x) {
    const double margin = 0.1 * std::max(1.0, spec.abscissa) + 1.0;
    return std::max(2.0 * spec.talbot_nodes / (5.0 * x), spec.abscissa + margin);
}

// Fixed Talbot sum; `weight_power` = 1 multiplies the integrand by s, which
// evaluates f'(x) on the same contour.
double talbot_sum(const TransformSpec& spec, double x, int weight_power) {
    const int m = spec.talbot_nodes;
    const double r = talbot_radius(spec, x);

    const std::complex<double> f_r = spec.transform(std::complex<double>(r, 0.0));
    double acc = 0.5 * std::exp(r * x) * f_r.real() * (weight_power == 0 ? 1.0 : r);

    for (int k = 1; k < m; ++k) {
        const double theta = k * kPi / m;
        const double cot = std::cos(theta) / std::sin(theta);
        const std::complex<double> s(r * theta * cot, r * theta);
        const double sigma = theta + (theta * cot - 1.0) * cot;
        std::complex<double> term =
            std::exp(s * x) * spec.transform(s) * std::complex<double>(1.0, sigma);
        if (weight_power == 1) term *= s;
        acc += term.real();
    }
    return acc * r / m;
}

// Stehfest weights; n <= 18 keeps every factorial exact in long double.
std::vector<double> stehfest_weights(int n) {
    const int half = n / 2;
    auto fact = [](int k) {
        long double f = 1.0L;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    std::vector<double> w(n + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        long double sum = 0.0L;
        for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
            long double term = std::pow((long double)j, half) * fact(2 * j);
            term /= fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k);
            sum += term;
        }
        w[k] = double(((half + k) % 2 == 0 ? 1.0L : -1.0L) * sum);
    }
    return w;
}

double gaver_stehfest(const TransformSpec& spec, double x) {
    // Translate so the rightmost singularity is at the origin; the evaluation
    // points k ln2 / x are then always inside the region of analyticity.
    const double shift = std::max(0.0, spec.abscissa);
    const auto w = stehfest_weights(spec.stehfest_terms);
    const double ln2_over_x = std::log(2.0) / x;
    double acc = 0.0;
    for (int k = 1; k <= spec.stehfest_terms; ++k) {
        const std::complex<double> val =
            spec.transform(std::complex<double>(shift + k * ln2_over_x, 0.0));
        acc += w[k] * val.real();
    }
    return acc * ln2_over_x * std::exp(shift * x);
}

double invert_impl(const TransformSpec& spec, double x) {
    return spec.method == InversionMethod::FixedTalbot ? talbot_sum(spec, x, 0)
                                                       : gaver_stehfest(spec, x);
}

} // namespace

double invert(const TransformSpec& spec, double x) {
    validate(spec, x);
    const double primary = invert_impl(spec, x);
    if (spec.cross_check) {
        TransformSpec other = spec;
        other.cross_check = false;
        other.method = spec.method == InversionMethod::FixedTalbot
                           ? InversionMethod::GaverStehfest
                           : InversionMethod::FixedTalbot;
        const double secondary = invert_impl(other, x);
        const double scale = std::max({1.0, std::abs(primary), std::abs(secondary)});
        if (std::abs(primary - secondary) > spec.cross_check_tol * scale)
            throw NonConvergence("inversion methods disagree beyond the cross-check tolerance");
    }
    return primary;
}

double invert_derivative(const TransformSpec& spec, double x, double step_hint) {
    validate(spec, x);
    const double h = std::max(step_hint, 1e-6 * std::max(1.0, x));
    const double f0 = invert(spec, x);
    const double f1 = invert(spec, x + h);
    const double f2 = invert(spec, x + 2.0 * h);
    return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

double invert_derivative_contour(const TransformSpec& spec, double x) {
    validate(spec, x);
    if (spec.method != InversionMethod::FixedTalbot) return invert_derivative(spec, x, 0.0);
    return talbot_sum(spec, x, 1);
}

} // namespace levyfluct
