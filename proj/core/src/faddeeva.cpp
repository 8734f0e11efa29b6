#include "gsft/faddeeva.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "gsft/errors.hpp"
#include "gsft/quadrature.hpp"

namespace gsft {
namespace {

constexpr double kTwoOverSqrtPi = std::numbers::inv_sqrtpi * 2.0;
// log(DBL_MAX) with a little headroom for the factor 2 in the continuation.
constexpr double kMaxExponent = 708.0;

std::string describe(Complex z) {
  std::ostringstream out;
  out.precision(17);
  out << '(' << z.real() << ", " << z.imag() << ')';
  return out.str();
}

void require_finite(Complex z, const char* op) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InvalidArgument(std::string(op) + ": argument " + describe(z) +
                          " is not finite");
  }
}

/// exp(-z^2), refusing to overflow.
Complex exp_neg_square(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  // y^2 - x^2 without cancellation when |x| ~ |y|.
  const double exponent = (std::abs(y) - std::abs(x)) * (std::abs(y) + std::abs(x));
  if (exponent > kMaxExponent) {
    std::ostringstream msg;
    msg << "exp(-z^2) overflows at z = " << describe(z) << ": |exp(-z^2)| = e^"
        << exponent;
    throw OverflowError(msg.str(), exponent);
  }
  const double magnitude = std::exp(exponent);
  const double phase = 2.0 * x * y;
  return {magnitude * std::cos(phase), -magnitude * std::sin(phase)};
}

/// w(x + iy) for y >= 0.
///
/// Region split after Poppe and Wijers: a power series for w(z)exp(z^2) near
/// the origin, a Taylor expansion whose derivatives come from the Laplace
/// continued fraction in the band around it, and the bare continued fraction
/// further out. Evaluated in the first quadrant; w(-x + iy) = conj w(x + iy).
Complex w_upper(double x, double y) {
  const double xabs = std::abs(x);
  const double yabs = y;
  const double xs = xabs / 6.3;
  const double ys = yabs / 4.4;
  double qrho = xs * xs + ys * ys;

  const double xquad = (xabs - yabs) * (xabs + yabs);
  const double yquad = 2.0 * xabs * yabs;

  double u = 0.0;
  double v = 0.0;

  if (qrho < 0.085264) {
    // sum_{k} (-z^2)^k / (k! (2k+1)) via Horner, then w = exp(-z^2)(1 + 2iz/sqrt(pi) * sum).
    qrho = (1.0 - 0.85 * ys) * std::sqrt(qrho);
    const int n = static_cast<int>(std::lround(6.0 + 72.0 * qrho));
    int j = 2 * n + 1;
    double xsum = 1.0 / j;
    double ysum = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double xaux = (xsum * xquad - ysum * yquad) / i;
      ysum = (xsum * yquad + ysum * xquad) / i;
      xsum = xaux + 1.0 / j;
    }
    const double u1 = -kTwoOverSqrtPi * (xsum * yabs + ysum * xabs) + 1.0;
    const double v1 = kTwoOverSqrtPi * (xsum * xabs - ysum * yabs);
    const double damp = std::exp(-xquad);
    const double u2 = damp * std::cos(yquad);
    const double v2 = -damp * std::sin(yquad);
    u = u1 * u2 - v1 * v2;
    v = u1 * v2 + v1 * u2;
  } else {
    double h = 0.0;
    int kapn = 0;
    int nu = 0;
    if (qrho > 1.0) {
      qrho = std::sqrt(qrho);
      nu = static_cast<int>(3.0 + 1442.0 / (26.0 * qrho + 77.0));
    } else {
      qrho = (1.0 - ys) * std::sqrt(1.0 - qrho);
      h = 1.88 * qrho;
      kapn = static_cast<int>(std::lround(7.0 + 34.0 * qrho));
      nu = static_cast<int>(std::lround(16.0 + 26.0 * qrho));
    }
    const bool taylor = h > 0.0;
    const double h2 = 2.0 * h;
    double qlambda = taylor ? std::pow(h2, kapn) : 0.0;

    double rx = 0.0;
    double ry = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    for (int n = nu; n >= 0; --n) {
      const double np1 = n + 1.0;
      double tx = yabs + h + np1 * rx;
      const double ty = xabs - np1 * ry;
      const double c = 0.5 / (tx * tx + ty * ty);
      rx = c * tx;
      ry = c * ty;
      if (taylor && n <= kapn) {
        tx = qlambda + sx;
        sx = rx * tx - ry * sy;
        sy = ry * tx + rx * sy;
        qlambda /= h2;
      }
    }
    if (taylor) {
      u = kTwoOverSqrtPi * sx;
      v = kTwoOverSqrtPi * sy;
    } else {
      u = kTwoOverSqrtPi * rx;
      v = kTwoOverSqrtPi * ry;
    }
    if (yabs == 0.0) u = std::exp(-xabs * xabs);
  }

  if (x < 0.0) v = -v;
  return {u, v};
}

}  // namespace

Complex w(Complex z) {
  require_finite(z, "w");
  if (z.imag() >= 0.0) return w_upper(z.real(), z.imag());
  return 2.0 * exp_neg_square(z) - w_upper(-z.real(), -z.imag());
}

Complex w_quadrature_oracle(Complex z, double tol) {
  require_finite(z, "w_quadrature_oracle");
  if (!(tol > 0.0 && tol <= 1e-6)) {
    throw InvalidArgument("w_quadrature_oracle: tol must lie in (0, 1e-6]");
  }
  const double x = z.real();
  const double y = z.imag();
  // Past u = peak + 7.5 the Gaussian factor is below e^{-56}.
  constexpr double kTail = 7.5;
  const double inner_tol = tol / kTwoOverSqrtPi;

  if (y >= 0.0) {
    const auto integrand = [x, y](double u) {
      return std::exp(-u * (u + 2.0 * y)) * Complex(std::cos(2.0 * x * u), std::sin(2.0 * x * u));
    };
    return kTwoOverSqrtPi * quadrature::integrate(integrand, 0.0, kTail, inner_tol).value;
  }

  // exp(-u^2 - 2yu) = exp(a^2) exp(-(u - a)^2) with a = -y > 0.
  const double a = -y;
  const double log_scale = a * a;
  if (log_scale > kMaxExponent) {
    throw OverflowError("w_quadrature_oracle: integrand scale e^" +
                            std::to_string(log_scale) + " overflows",
                        log_scale);
  }
  const auto integrand = [x, a](double u) {
    const double d = u - a;
    return std::exp(-d * d) * Complex(std::cos(2.0 * x * u), std::sin(2.0 * x * u));
  };
  const Complex inner = quadrature::integrate(integrand, 0.0, a + kTail, inner_tol).value;
  return kTwoOverSqrtPi * std::exp(log_scale) * inner;
}

Complex w_weighted(double x, double a) {
  if (!std::isfinite(x) || !std::isfinite(a)) {
    throw InvalidArgument("w_weighted: arguments must be finite");
  }
  if (a < 0.0) throw InvalidArgument("w_weighted: a must be >= 0");
  if (a == 0.0) return w_upper(x, 0.0);

  const double gauss_x = std::exp(-x * x);
  const double gauss_a = std::exp(-a * a);
  Complex result{};
  if (gauss_x != 0.0) {
    const double phase = 2.0 * x * a;
    result = 2.0 * gauss_x * Complex(std::cos(phase), std::sin(phase));
  }
  if (gauss_a != 0.0) result -= gauss_a * w_upper(-x, a);
  return result;
}

Complex erf_complex(Complex z) {
  require_finite(z, "erf_complex");
  // Odd symmetry keeps iz in the closed upper half-plane.
  if (z.real() < 0.0) return -erf_complex(-z);
  return 1.0 - exp_neg_square(z) * w(Complex(-z.imag(), z.real()));
}

Complex dawson(Complex z) {
  require_finite(z, "dawson");
  if (z.imag() < 0.0) return -dawson(-z);
  constexpr double kHalfSqrtPi = 0.5 / std::numbers::inv_sqrtpi;
  const Complex diff = w(z) - exp_neg_square(z);
  // diff / (2i) = -i diff / 2
  return kHalfSqrtPi * Complex(diff.imag(), -diff.real());
}

double voigt(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw InvalidArgument("voigt: arguments must be finite");
  }
  if (y < 0.0) throw InvalidArgument("voigt: y must be >= 0");
  if (y == 0.0) return std::exp(-x * x);
  return w_upper(x, y).real();
}

Complex fresnel(Complex z) {
  require_finite(z, "fresnel");
  // Argument of w is sqrt(pi)(1+i)z/2; its imaginary part has the sign of
  // Re z + Im z. Use oddness to stay in the upper half-plane.
  if (z.real() + z.imag() < 0.0) return -fresnel(-z);
  const Complex one_plus_i{1.0, 1.0};
  const Complex zeta = 0.5 / std::numbers::inv_sqrtpi * one_plus_i * z;
  // zeta^2 = i pi z^2 / 2, so the prefactor is exp(zeta^2).
  const Complex exponent = Complex(0.0, 0.5 * std::numbers::pi) * z * z;
  if (exponent.real() > kMaxExponent) {
    throw OverflowError("fresnel: exp(i pi z^2 / 2) overflows at z = " + describe(z),
                        exponent.real());
  }
  const Complex phase = std::exp(exponent);
  return 0.5 * one_plus_i * (1.0 - phase * w(zeta));
}

Complex normal_cdf(Complex z) {
  require_finite(z, "normal_cdf");
  return 0.5 * erf_complex(z / std::numbers::sqrt2);
}

AccuracyReport compare_with_oracle(std::span<const Complex> points, double tol) {
  AccuracyReport report;
  double sum = 0.0;
  for (const Complex z : points) {
    const Complex diff = w(z) - w_quadrature_oracle(z, tol);
    const double err = std::max(std::abs(diff.real()), std::abs(diff.imag()));
    report.max_abs_error = std::max(report.max_abs_error, err);
    sum += err;
  }
  report.points_tested = points.size();
  if (!points.empty()) report.mean_abs_error = sum / static_cast<double>(points.size());
  return report;
}

}  // namespace gsft
