#pragma once

#include <functional>

namespace landau {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
};

/// Adaptive 61-point Gauss-Kronrod integration of f over [a, b] to an absolute
/// tolerance. Throws DomainError if the tolerance cannot be met.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-10);

}  // namespace landau
