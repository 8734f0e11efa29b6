#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace gsft {

using Complex = std::complex<double>;

/// Componentwise accuracy the upper half-plane evaluation of w is built to.
inline constexpr double kFaddeevaAccuracy = 1e-10;

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// The upper half-plane is evaluated directly; for Im z < 0 the continuation
/// w(z) = 2 exp(-z^2) - w(-z) is used. Throws OverflowError when exp(-z^2)
/// is not representable and InvalidArgument for non-finite z.
Complex w(Complex z);

/// Reference value of w(z) from adaptive quadrature of
/// (2/sqrt(pi)) * int_0^inf exp(-u^2 - 2yu + 2ixu) du.
///
/// `tol` must lie in (0, 1e-6]. For Im z < 0 the integrand peaks at u = -y
/// with height exp(y^2); the tolerance then bounds the integral with that
/// factor removed, which is the best double precision can resolve.
Complex w_quadrature_oracle(Complex z, double tol);

/// exp(-a^2) * w(x - i a) for a >= 0, evaluated as
/// 2 exp(-x^2) exp(2ixa) - exp(-a^2) w(-x + ia) so that no factor overflows.
Complex w_weighted(double x, double a);

/// erf(z) = 1 - exp(-z^2) w(iz).
Complex erf_complex(Complex z);

/// Dawson's integral exp(-z^2) int_0^z exp(u^2) du.
Complex dawson(Complex z);

/// Voigt function K(x, y) = Re w(x + iy), y >= 0. K(x, 0) = exp(-x^2).
double voigt(double x, double y);

/// Fresnel integral int_0^z exp(i (pi/2) u^2) du.
Complex fresnel(Complex z);

/// Normal distribution integral (1/sqrt(2 pi)) int_0^z exp(-u^2/2) du,
/// so normal_cdf(0) = 0.
Complex normal_cdf(Complex z);

struct AccuracyReport {
  double max_abs_error = 0.0;
  double mean_abs_error = 0.0;
  std::size_t points_tested = 0;
};

/// Largest componentwise deviation of w from the quadrature oracle over
/// `points`.
AccuracyReport compare_with_oracle(std::span<const Complex> points,
                                   double tol);

}  // namespace gsft
