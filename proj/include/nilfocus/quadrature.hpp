#pragma once

#include <functional>

namespace nilfocus {

/// Adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b] to absolute
/// tolerance tol. Throws on non-convergence.
double adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace nilfocus
