#pragma once

#include <complex>
#include <string>
#include <variant>

#include "levyfluct/errors.hpp"

namespace levyfluct {

// Model parameters follow the convention
//   psi(l) = -mu*l + (sigma^2/2) l^2 + jump part,
// so positive mu tilts the path downward. All values are per unit time.

/// Brownian motion with drift -mu and volatility sigma > 0.
struct BrownianDrift {
    double mu = 0.0;
    double sigma = 1.0;
};

/// Spectrally negative stable process, index alpha in (1,2], scale c > 0.
/// Skewness is pinned at -1 (no positive jumps).
struct StableSN {
    double alpha = 1.5;
    double c = 1.0;
};

/// Two-sided stable process with negative jumps: alpha in (0,1) or (1,2),
/// skewness beta in [-1,1), scale c > 0. Has no Laplace exponent.
struct StableGeneral {
    double alpha = 1.5;
    double beta = 0.0;
    double c = 1.0;
};

/// Brownian part plus compound-Poisson negative jumps with exponentially
/// distributed sizes (rate jump_rate, mean size jump_mean). mu absorbs any
/// jump compensation, so psi needs no truncation term.
struct JumpDiffusion {
    double mu = 0.0;
    double sigma = 1.0;
    double jump_rate = 1.0;
    double jump_mean = 1.0;
};

/// Immutable model value; validates its parameters on construction.
class LevyModel {
  public:
    using Variant = std::variant<BrownianDrift, StableSN, StableGeneral, JumpDiffusion>;

    static LevyModel brownian(double mu, double sigma);
    static LevyModel stable_spectrally_negative(double alpha, double c);
    static LevyModel stable(double alpha, double beta, double c);
    static LevyModel jump_diffusion(double mu, double sigma, double jump_rate, double jump_mean);

    const Variant& variant() const { return v_; }

    template <typename T> bool is() const { return std::holds_alternative<T>(v_); }
    template <typename T> const T& as() const { return std::get<T>(v_); }

    /// True for the variants with no positive jumps (BrownianDrift, StableSN,
    /// JumpDiffusion); these are the ones with a Laplace exponent.
    bool spectrally_negative() const;

    /// Short identifier used in JSON/CSV output ("bm", "stable_sn", ...).
    std::string name() const;

  private:
    explicit LevyModel(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// psi(lambda) = log E exp(lambda X_1) for lambda >= 0.
/// Rejects StableGeneral and negative lambda.
double laplace_exponent(const LevyModel& model, double lambda);

/// Analytic continuation of psi used by the contour inversion; the caller is
/// responsible for staying off the branch cut of the stable variant.
std::complex<double> laplace_exponent(const LevyModel& model, std::complex<double> lambda);

/// d/dlambda psi(lambda); closed form for every spectrally negative variant.
double laplace_exponent_derivative(const LevyModel& model, double lambda);

/// Right inverse of psi: the unique lambda > 0 with psi(lambda) = gamma,
/// gamma > 0. |psi(phi(gamma)) - gamma| <= 1e-12 * max(1, gamma).
double phi(const LevyModel& model, double gamma);

/// Largest root of psi(lambda) = 0; zero unless the process drifts to -inf.
double phi_zero(const LevyModel& model);

/// Psi(lambda) = c|lambda|^alpha (1 - i beta sgn(lambda) tan(pi alpha / 2)).
/// Stable variants only.
std::complex<double> characteristic_exponent(const LevyModel& model, double lambda);

/// Mean of X_1, i.e. psi'(0+); -inf never occurs for the supported variants.
double mean_rate(const LevyModel& model);

} // namespace levyfluct
