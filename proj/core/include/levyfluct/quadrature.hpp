#pragma once

#include <functional>

#include "levyfluct/errors.hpp"

namespace levyfluct {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
/// Throws QuadratureError if the refinement limit is reached.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

} // namespace levyfluct
