#include "gsft/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "gsft/errors.hpp"
#include "gsft/quadrature.hpp"
#include "parallel.hpp"

namespace gsft {
namespace {

constexpr double kPi = std::numbers::pi;

bool in_support(double t) { return t >= -0.5 && t <= 0.5; }

}  // namespace

double example_f(double t) { return in_support(t) ? 2.0 * t + 1.0 : 0.0; }
double example_even(double t) { return in_support(t) ? 1.0 : 0.0; }
double example_odd(double t) { return in_support(t) ? 2.0 * t : 0.0; }

double example_wavelet(WaveletPart part, double t) {
  switch (part) {
    case WaveletPart::full: return example_f(t);
    case WaveletPart::even_part: return example_even(t);
    case WaveletPart::odd_part: return example_odd(t);
  }
  return 0.0;
}

SampledFunction sample_example(WaveletPart part, const TransformConfig& cfg) {
  return SampledFunction::from_function(cfg, [part](double t) { return example_wavelet(part, t); });
}

double analytic_G(double nu) {
  if (nu == 0.0) return 1.0;
  const double x = kPi * nu;
  return std::sin(x) / x;
}

Complex analytic_H(double nu) {
  const double x = kPi * nu;
  // (x cos x - sin x) / x^2 = -x/3 + x^3/30 - x^5/840 + ...
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return {0.0, x * (-1.0 / 3.0 + x2 * (1.0 / 30.0 - x2 / 840.0))};
  }
  return {0.0, (x * std::cos(x) - std::sin(x)) / (x * x)};
}

ErrorEnvelope delta_envelope(const TransformConfig& cfg, const EvaluationGrid& grid,
                             std::size_t threads) {
  const double covered = static_cast<double>(cfg.sample_count()) * cfg.step();
  if (std::abs(covered - kExampleLength) > kEffectiveLengthTolerance * kExampleLength) {
    throw InvalidArgument("delta_envelope: (2N+1)h = " + std::to_string(covered) +
                          " does not cover the unit support");
  }
  const SampledFunction even = sample_example(WaveletPart::even_part, cfg);
  const SampledFunction odd = sample_example(WaveletPart::odd_part, cfg);

  ErrorEnvelope env{grid, std::vector<double>(grid.size()), std::vector<double>(grid.size())};
  detail::parallel_for(grid.size(), threads, [&](std::size_t k) {
    const double nu = grid[k];
    env.delta_re[k] = analytic_G(nu) - forward_even(even, cfg, nu);
    env.delta_im[k] = analytic_H(nu).imag() - forward_odd(odd, cfg, nu).imag();
  });
  // Sequential reduction, independent of thread count.
  for (std::size_t k = 0; k < grid.size(); ++k) {
    env.max_abs_re = std::max(env.max_abs_re, std::abs(env.delta_re[k]));
    env.max_abs_im = std::max(env.max_abs_im, std::abs(env.delta_im[k]));
  }
  return env;
}

void write_envelope_csv(std::ostream& out, const ErrorEnvelope& envelope) {
  out << "nu,delta_re,delta_im\n";
  for (std::size_t k = 0; k < envelope.grid.size(); ++k) {
    out << fmt::format("{:.17g},{:.17g},{:.17g}\n", envelope.grid[k], envelope.delta_re[k],
                       envelope.delta_im[k]);
  }
}

Complex quadrature_ft_oracle(const std::function<double(double)>& f, Support support,
                             double nu, double tol) {
  if (!(tol > 0.0 && tol <= 1e-6)) {
    throw InvalidArgument("quadrature_ft_oracle: tol must lie in (0, 1e-6]");
  }
  if (!(support.lower < support.upper)) {
    throw InvalidArgument("quadrature_ft_oracle: empty support");
  }
  const auto integrand = [&f, nu](double t) {
    const double phase = -2.0 * kPi * nu * t;
    return f(t) * Complex(std::cos(phase), std::sin(phase));
  };
  return quadrature::integrate(integrand, support.lower, support.upper, tol).value;
}

}  // namespace gsft
