#pragma once

#include <functional>

namespace convdens {

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to the
/// given absolute tolerance. Bisects until the embedded error estimate of
/// every subinterval is below its share of the budget; throws
/// std::runtime_error if the subdivision limit is reached first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

}  // namespace convdens
