#include "levyfluct/scale.hpp"

#include <cmath>

#include "levyfluct/quadrature.hpp"

namespace levyfluct {

namespace {

// (exp(l*x) - 1) / l with the l -> 0 limit.
double expm1_over(double l, double x) {
    if (l == 0.0) return x;
    return std::expm1(l * x) / l;
}

constexpr double kZeroPlus = 1e-8;       // evaluation point for W(0+) under inversion
constexpr double kSegment = 1.0;         // Z integral checkpoint spacing
constexpr double kSegmentTol = 1e-11;    // per-segment quadrature tolerance

} // namespace

ScaleEvaluator::ScaleEvaluator(const LevyModel& model, double q,
                               std::optional<ScaleBackend> backend, int talbot_nodes)
    : model_(model), q_(q) {
    if (!std::isfinite(q) || q < 0.0) throw ArgumentError("ScaleEvaluator requires q >= 0");
    if (!model.spectrally_negative())
        throw ArgumentError("scale functions require a spectrally negative model");

    phi_q_ = q > 0.0 ? phi(model, q) : phi_zero(model);
    backend_ = backend.value_or(model.is<BrownianDrift>() ? ScaleBackend::ClosedForm
                                                          : ScaleBackend::NumericInversion);
    if (backend_ == ScaleBackend::ClosedForm && !model.is<BrownianDrift>())
        throw ArgumentError("closed-form scale backend exists only for BrownianDrift");

    if (model.is<BrownianDrift>()) {
        const auto& m = model.as<BrownianDrift>();
        const double s2 = m.sigma * m.sigma;
        const double disc = std::sqrt(m.mu * m.mu + 2.0 * s2 * q);
        root_plus_ = (m.mu + disc) / s2;
        root_minus_ = (m.mu - disc) / s2;
        root_gap_ = disc;
    }

    const LevyModel mdl = model_;
    const double tilt = phi_q_;
    const double qq = q_;
    tilted_.transform = [mdl, tilt, qq](std::complex<double> s) {
        return 1.0 / (laplace_exponent(mdl, s + tilt) - qq);
    };
    tilted_.abscissa = 0.0;
    tilted_.talbot_nodes = talbot_nodes;
}

double ScaleEvaluator::W_closed(double x) const {
    const auto& m = model_.as<BrownianDrift>();
    const double s2 = m.sigma * m.sigma;
    if (root_gap_ == 0.0) return 2.0 * x / s2 * std::exp(root_plus_ * x);
    // (e^{l+ x} - e^{l- x}) / disc, written through expm1 so the nearly
    // degenerate-root case stays accurate.
    return std::exp(root_minus_ * x) * std::expm1((root_plus_ - root_minus_) * x) / root_gap_;
}

double ScaleEvaluator::W_prime_closed(double x) const {
    const auto& m = model_.as<BrownianDrift>();
    const double s2 = m.sigma * m.sigma;
    if (root_gap_ == 0.0)
        return (2.0 / s2) * std::exp(root_plus_ * x) * (1.0 + root_plus_ * x);
    return std::exp(root_minus_ * x) *
           (root_plus_ * std::exp((root_plus_ - root_minus_) * x) - root_minus_) / root_gap_;
}

double ScaleEvaluator::W_integral_closed(double x) const {
    const auto& m = model_.as<BrownianDrift>();
    const double s2 = m.sigma * m.sigma;
    if (root_gap_ == 0.0) {
        const double l = root_plus_;
        if (l == 0.0) return x * x / s2;
        return (2.0 / s2) * (std::exp(l * x) * (l * x - 1.0) + 1.0) / (l * l);
    }
    return (expm1_over(root_plus_, x) - expm1_over(root_minus_, x)) / root_gap_;
}

double ScaleEvaluator::tilted_invert(double x) const { return invert(tilted_, x); }

double ScaleEvaluator::W(double x) const {
    if (x < 0.0) return 0.0;
    if (backend_ == ScaleBackend::ClosedForm) return W_closed(x);
    if (x == 0.0) x = kZeroPlus;
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = w_cache_.find(x);
        if (it != w_cache_.end()) return it->second;
    }
    const double value = std::exp(phi_q_ * x) * tilted_invert(x);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return w_cache_.emplace(x, value).first->second;
}

double ScaleEvaluator::W_integral(double x) const {
    if (backend_ == ScaleBackend::ClosedForm) return W_integral_closed(x);
    // Cumulative integral over fixed unit segments is cached; only the final
    // partial segment is integrated per call, so the result is a pure
    // function of x no matter the query history.
    const auto integrand = [this](double y) { return W(y); };
    const std::size_t full = std::size_t(x / kSegment);
    double base = 0.0;
    if (full > 0) {
        std::unique_lock<std::mutex> lock(cache_mutex_);
        auto it = z_integral_cache_.find(double(full));
        if (it != z_integral_cache_.end()) {
            base = it->second;
        } else {
            lock.unlock();
            double acc = 0.0;
            for (std::size_t k = 0; k < full; ++k)
                acc += adaptive_simpson(integrand, k * kSegment, (k + 1) * kSegment, kSegmentTol);
            lock.lock();
            base = z_integral_cache_.emplace(double(full), acc).first->second;
        }
    }
    const double from = full * kSegment;
    if (x == from) return base;
    return base + adaptive_simpson(integrand, from, x, kSegmentTol);
}

double ScaleEvaluator::Z(double x) const {
    if (x <= 0.0) return 1.0;
    if (q_ == 0.0) return 1.0;
    return 1.0 + q_ * W_integral(x);
}

double ScaleEvaluator::W_right_derivative(double x) const {
    if (!std::isfinite(x) || x <= 0.0)
        throw DomainError("W_right_derivative requires x > 0");
    if (backend_ == ScaleBackend::ClosedForm) return W_prime_closed(x);
    const double g = W(x) * std::exp(-phi_q_ * x);
    const double gprime = invert_derivative_contour(tilted_, x);
    return std::exp(phi_q_ * x) * (phi_q_ * g + gprime);
}

double ScaleEvaluator::excursion_rate(double t) const {
    if (q_ != 0.0) throw ArgumentError("excursion_rate requires a q = 0 evaluator");
    if (!std::isfinite(t) || t <= 0.0) throw DomainError("excursion_rate requires t > 0");
    return W_right_derivative(t) / W(t);
}

} // namespace levyfluct
