#pragma once

// Test-only reference computations. Nothing here calls into the Faddeeva or
// transform code paths it is used to check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>

namespace gsft::testing {

/// Composite Simpson rule with `intervals` (even) panels.
template <class F>
auto simpson(F&& f, double a, double b, std::size_t intervals) {
  const double step = (b - a) / static_cast<double>(intervals);
  auto sum = f(a) + f(b);
  for (std::size_t i = 1; i < intervals; ++i) {
    const double weight = (i % 2 == 1) ? 4.0 : 2.0;
    sum += weight * f(a + step * static_cast<double>(i));
  }
  return sum * (step / 3.0);
}

/// (2/sqrt(pi)) int_0^7.5 exp(-u^2 - 2yu + 2ixu) du by Simpson; y >= 0.
inline std::complex<double> w_simpson(std::complex<double> z, std::size_t intervals = 200000) {
  const double x = z.real();
  const double y = z.imag();
  const auto integrand = [x, y](double u) {
    return std::exp(-u * (u + 2.0 * y)) * std::complex<double>(std::cos(2.0 * x * u),
                                                                std::sin(2.0 * x * u));
  };
  return 2.0 * std::numbers::inv_sqrtpi * simpson(integrand, 0.0, 7.5, intervals);
}

/// erf(x) = (2/sqrt(pi)) sum_k (-1)^k x^(2k+1) / (k! (2k+1)).
inline double erf_maclaurin(double x) {
  double term = x;  // (-1)^k x^(2k+1) / k!
  double sum = x;
  for (int k = 1; k < 200; ++k) {
    term *= -x * x / k;
    const double next = term / (2 * k + 1);
    sum += next;
    if (std::abs(next) < 1e-18 * std::abs(sum)) break;
  }
  return 2.0 * std::numbers::inv_sqrtpi * sum;
}

/// Deterministic generator shared by property tests.
inline std::mt19937_64 make_rng(std::uint64_t seed = 20151005) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Componentwise max |a - b|.
inline double component_error(std::complex<double> a, std::complex<double> b) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}

/// Resolution scale of the quadrature oracle at z: 1 in the upper half-plane,
/// exp(y^2) (the peak of its integrand) below it.
inline double oracle_scale(std::complex<double> z) {
  if (z.imag() >= 0.0) return 1.0;
  return std::exp(z.imag() * z.imag());
}

}  // namespace gsft::testing
