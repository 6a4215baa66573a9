#pragma once

#include <functional>

namespace eprb {

/// Adaptive composite Simpson integration of f over [a, b] to the given
/// absolute tolerance. The integrand must be smooth on the interior;
/// callers split at known kinks first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

}  // namespace eprb
