#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "levyfluct/laplace.hpp"
#include "levyfluct/models.hpp"

namespace levyfluct {

enum class ScaleBackend { ClosedForm, NumericInversion };

/// Evaluates the scale functions W^(q), Z^(q) and the right derivative
/// W^(q)'_+ for one (model, q) pair.
///
/// The numeric backend inverts the tilted transform
///   1 / (psi(s + phi(q)) - q)
/// whose rightmost singularity sits at the origin, and multiplies the result
/// by exp(phi(q) x). This keeps the inverted function bounded, so relative
/// accuracy does not degrade as W^(q) grows exponentially in x.
///
/// Immutable apart from an internal memo cache (mutex-guarded); safe to share
/// across threads, and cached results are bit-identical to uncached ones.
class ScaleEvaluator {
  public:
    /// backend defaults to ClosedForm for BrownianDrift, NumericInversion
    /// otherwise. Requesting ClosedForm for a non-Brownian model throws.
    ScaleEvaluator(const LevyModel& model, double q,
                   std::optional<ScaleBackend> backend = std::nullopt, int talbot_nodes = 32);

    /// W^(q)(x); zero for x < 0, the right limit W^(q)(0+) at x = 0.
    double W(double x) const;

    /// Z^(q)(x) = 1 + q * integral of W^(q) over [0, x]; 1 for x <= 0.
    double Z(double x) const;

    /// Right derivative of W^(q) at x > 0.
    double W_right_derivative(double x) const;

    /// n(eps > t) = W'_+(t) / W(t), the rate of excursions of height > t.
    /// Requires q = 0 and t > 0; strictly positive and decreasing in t.
    double excursion_rate(double t) const;

    const LevyModel& model() const { return model_; }
    double q() const { return q_; }
    double phi_q() const { return phi_q_; }
    ScaleBackend backend() const { return backend_; }

  private:
    double W_closed(double x) const;
    double W_prime_closed(double x) const;
    double W_integral_closed(double x) const;
    double tilted_invert(double x) const;
    double W_integral(double x) const;

    LevyModel model_;
    double q_;
    double phi_q_;
    ScaleBackend backend_;
    TransformSpec tilted_;

    // Two-exponential closed form: roots of psi(lambda) = q.
    double root_plus_ = 0.0, root_minus_ = 0.0, root_gap_ = 0.0;

    mutable std::mutex cache_mutex_;
    mutable std::map<double, double> w_cache_;
    mutable std::map<double, double> z_integral_cache_; // x -> integral of W over [0,x]
};

} // namespace levyfluct
