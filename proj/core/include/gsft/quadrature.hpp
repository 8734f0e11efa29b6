#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace gsft::quadrature {

struct Result {
  std::complex<double> value;
  double error_estimate = 0.0;
  std::size_t subdivisions = 0;
};

using Integrand = std::function<std::complex<double>(double)>;

inline constexpr std::size_t kDefaultSubdivisionBudget = 4000;

/// Globally adaptive Gauss-Kronrod (7/15) integration of a complex-valued
/// integrand over the finite interval [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops to `abs_tol`. Throws ConvergenceError when the subdivision
/// budget runs out or an interval becomes too narrow to split.
Result integrate(const Integrand& f, double a, double b, double abs_tol,
                 std::size_t max_subdivisions = kDefaultSubdivisionBudget);

}  // namespace gsft::quadrature
