#include "levyfluct/quadrature.hpp"

#include <cmath>

namespace levyfluct {

namespace {

struct Simpson {
    const std::function<double(double)>& f;
    int max_depth;

    double recurse(double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) const {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14)
            return left + right + delta / 15.0;
        if (depth >= max_depth)
            throw QuadratureError("adaptive_simpson: refinement limit reached");
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(tol > 0.0)) throw ArgumentError("adaptive_simpson requires tol > 0");
    if (a == b) return 0.0;
    const double sign = a < b ? 1.0 : -1.0;
    if (a > b) std::swap(a, b);
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return sign * Simpson{f, 48}.recurse(a, b, fa, fm, fb, whole, tol, 0);
}

} // namespace levyfluct
