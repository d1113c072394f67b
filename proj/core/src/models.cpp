#include "levyfluct/models.hpp"

#include <cmath>
#include <limits>

namespace levyfluct {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool finite(double x) { return std::isfinite(x); }

// Coefficient of the spectrally negative stable Laplace exponent
// psi(l) = C l^alpha, obtained by continuing the characteristic exponent with
// beta = -1 to the negative imaginary axis: C = -c / cos(pi alpha / 2) > 0
// for alpha in (1,2].
double stable_sn_coeff(const StableSN& m) { return -m.c / std::cos(kPi * m.alpha / 2.0); }

} // namespace

LevyModel LevyModel::brownian(double mu, double sigma) {
    if (!finite(mu) || !finite(sigma) || sigma <= 0.0)
        throw ArgumentError("BrownianDrift requires finite mu and sigma > 0");
    return LevyModel(BrownianDrift{mu, sigma});
}

LevyModel LevyModel::stable_spectrally_negative(double alpha, double c) {
    if (!finite(alpha) || !finite(c) || alpha <= 1.0 || alpha > 2.0 || c <= 0.0)
        throw ArgumentError("StableSN requires alpha in (1,2] and c > 0");
    return LevyModel(StableSN{alpha, c});
}

LevyModel LevyModel::stable(double alpha, double beta, double c) {
    if (!finite(alpha) || !finite(beta) || !finite(c))
        throw ArgumentError("StableGeneral parameters must be finite");
    if (alpha <= 0.0 || alpha >= 2.0 || alpha == 1.0)
        throw ArgumentError("StableGeneral requires alpha in (0,1) or (1,2)");
    if (beta < -1.0 || beta >= 1.0)
        throw ArgumentError("StableGeneral requires beta in [-1,1) so negative jumps exist");
    if (c <= 0.0) throw ArgumentError("StableGeneral requires c > 0");
    return LevyModel(StableGeneral{alpha, beta, c});
}

LevyModel LevyModel::jump_diffusion(double mu, double sigma, double jump_rate, double jump_mean) {
    if (!finite(mu) || !finite(sigma) || !finite(jump_rate) || !finite(jump_mean))
        throw ArgumentError("JumpDiffusion parameters must be finite");
    if (sigma < 0.0 || jump_rate <= 0.0 || jump_mean <= 0.0)
        throw ArgumentError("JumpDiffusion requires sigma >= 0, jump_rate > 0, jump_mean > 0");
    // sigma == 0 with downward drift would be the negative of a subordinator.
    if (sigma == 0.0 && mu >= 0.0)
        throw ArgumentError("JumpDiffusion with sigma = 0 needs upward drift (mu < 0) "
                            "so the path is not monotone");
    return LevyModel(JumpDiffusion{mu, sigma, jump_rate, jump_mean});
}

bool LevyModel::spectrally_negative() const {
    return !std::holds_alternative<StableGeneral>(v_);
}

std::string LevyModel::name() const {
    struct Visitor {
        std::string operator()(const BrownianDrift&) const { return "bm"; }
        std::string operator()(const StableSN&) const { return "stable_sn"; }
        std::string operator()(const StableGeneral&) const { return "stable_general"; }
        std::string operator()(const JumpDiffusion&) const { return "jump_diffusion"; }
    };
    return std::visit(Visitor{}, v_);
}

namespace {

template <typename Scalar>
Scalar psi_impl(const LevyModel& model, Scalar lambda) {
    struct Visitor {
        Scalar l;
        Scalar operator()(const BrownianDrift& m) const {
            return -m.mu * l + 0.5 * m.sigma * m.sigma * l * l;
        }
        Scalar operator()(const StableSN& m) const {
            using std::pow;
            return stable_sn_coeff(m) * pow(l, m.alpha);
        }
        Scalar operator()(const StableGeneral&) const {
            throw DomainError("StableGeneral has no Laplace exponent");
        }
        Scalar operator()(const JumpDiffusion& m) const {
            const double rho = 1.0 / m.jump_mean;
            return -m.mu * l + 0.5 * m.sigma * m.sigma * l * l - m.jump_rate * l / (rho + l);
        }
    };
    return std::visit(Visitor{lambda}, model.variant());
}

} // namespace

double laplace_exponent(const LevyModel& model, double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw DomainError("laplace_exponent requires lambda >= 0");
    if (!model.spectrally_negative())
        throw DomainError("laplace_exponent is defined only for spectrally negative models");
    return psi_impl(model, lambda);
}

std::complex<double> laplace_exponent(const LevyModel& model, std::complex<double> lambda) {
    if (!model.spectrally_negative())
        throw DomainError("laplace_exponent is defined only for spectrally negative models");
    return psi_impl(model, lambda);
}

double laplace_exponent_derivative(const LevyModel& model, double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw DomainError("laplace_exponent_derivative requires lambda >= 0");
    struct Visitor {
        double l;
        double operator()(const BrownianDrift& m) const { return -m.mu + m.sigma * m.sigma * l; }
        double operator()(const StableSN& m) const {
            return stable_sn_coeff(m) * m.alpha * std::pow(l, m.alpha - 1.0);
        }
        double operator()(const StableGeneral&) const {
            throw DomainError("StableGeneral has no Laplace exponent");
        }
        double operator()(const JumpDiffusion& m) const {
            const double rho = 1.0 / m.jump_mean;
            const double d = rho + l;
            return -m.mu + m.sigma * m.sigma * l - m.jump_rate * rho / (d * d);
        }
    };
    return std::visit(Visitor{lambda}, model.variant());
}

double mean_rate(const LevyModel& model) {
    struct Visitor {
        double operator()(const BrownianDrift& m) const { return -m.mu; }
        double operator()(const StableSN&) const { return 0.0; }
        double operator()(const StableGeneral& m) const {
            // Mean exists only for alpha > 1; the parameterization is centered.
            return m.alpha > 1.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
        }
        double operator()(const JumpDiffusion& m) const {
            return -m.mu - m.jump_rate * m.jump_mean;
        }
    };
    return std::visit(Visitor{}, model.variant());
}

namespace {

// Unique root of psi(lambda) = gamma, gamma > 0, on the increasing branch.
// psi is convex with psi(0) = 0, so for gamma > 0 the root is unique;
// safeguarded Newton inside a doubling bracket.
double solve_psi_level(const LevyModel& model, double gamma) {
    const double ftol = 1e-13 * std::max(1.0, gamma);

    double hi = 1.0;
    while (laplace_exponent(model, hi) < gamma) {
        hi *= 2.0;
        if (hi > 1e300) throw NonConvergence("phi: bracket expansion failed");
    }
    double lo = 0.0;
    double x = hi / 2.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double f = laplace_exponent(model, x) - gamma;
        if (std::abs(f) <= ftol) return x;
        if (f > 0.0) hi = x; else lo = x;
        const double df = laplace_exponent_derivative(model, x);
        double next = (df > 0.0) ? x - f / df : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;
        x = next;
    }
    if (std::abs(laplace_exponent(model, x) - gamma) > 1e-12 * std::max(1.0, gamma))
        throw NonConvergence("phi: root refinement stalled");
    return x;
}

} // namespace

double phi(const LevyModel& model, double gamma) {
    if (!std::isfinite(gamma) || gamma <= 0.0)
        throw DomainError("phi requires gamma > 0");
    if (!model.spectrally_negative())
        throw DomainError("phi is defined only for spectrally negative models");
    struct Closed {
        double gamma;
        double operator()(const BrownianDrift& m) const {
            const double s2 = m.sigma * m.sigma;
            return (m.mu + std::sqrt(m.mu * m.mu + 2.0 * s2 * gamma)) / s2;
        }
        template <typename Other> double operator()(const Other&) const {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    const double closed = std::visit(Closed{gamma}, model.variant());
    if (!std::isnan(closed)) return closed;
    return solve_psi_level(model, gamma);
}

double phi_zero(const LevyModel& model) {
    if (!model.spectrally_negative())
        throw DomainError("phi_zero is defined only for spectrally negative models");
    if (laplace_exponent_derivative(model, 0.0) >= 0.0) return 0.0;
    if (model.is<BrownianDrift>()) {
        const auto& m = model.as<BrownianDrift>();
        return 2.0 * m.mu / (m.sigma * m.sigma);
    }
    // psi dips below zero and recrosses at the unique positive root.
    double hi = 1.0;
    while (laplace_exponent(model, hi) <= 0.0) {
        hi *= 2.0;
        if (hi > 1e300) throw NonConvergence("phi_zero: bracket expansion failed");
    }
    double lo = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (laplace_exponent(model, mid) > 0.0) hi = mid; else lo = mid;
        if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
    }
    return hi;
}

std::complex<double> characteristic_exponent(const LevyModel& model, double lambda) {
    double alpha, beta, c;
    if (model.is<StableSN>()) {
        alpha = model.as<StableSN>().alpha;
        beta = -1.0;
        c = model.as<StableSN>().c;
    } else if (model.is<StableGeneral>()) {
        alpha = model.as<StableGeneral>().alpha;
        beta = model.as<StableGeneral>().beta;
        c = model.as<StableGeneral>().c;
    } else {
        throw ArgumentError("characteristic_exponent is defined for stable variants only");
    }
    if (lambda == 0.0) return {0.0, 0.0};
    const double sgn = lambda > 0.0 ? 1.0 : -1.0;
    const double mod = c * std::pow(std::abs(lambda), alpha);
    return {mod, -mod * beta * sgn * std::tan(kPi * alpha / 2.0)};
}

} // namespace levyfluct
