#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "gsft/faddeeva.hpp"
#include "gsft/sampling.hpp"
#include "gsft/transform.hpp"

namespace gsft {

// Worked example: f(t) = 2t + 1 on [-1/2, 1/2], split into an even window
// and an odd ramp. Values on the closed interval, zero outside.
enum class WaveletPart { full, even_part, odd_part };

double example_f(double t);
double example_even(double t);
double example_odd(double t);
double example_wavelet(WaveletPart part, double t);

/// Support width of the example wavelet.
inline constexpr double kExampleLength = 1.0;

SampledFunction sample_example(WaveletPart part, const TransformConfig& cfg);

/// Transform of the even window: sinc(pi nu), 1 at nu = 0.
double analytic_G(double nu);
/// Transform of the odd ramp: i (pi nu cos(pi nu) - sin(pi nu)) / (pi nu)^2.
Complex analytic_H(double nu);

struct ErrorEnvelope {
  EvaluationGrid grid;
  std::vector<double> delta_re;
  std::vector<double> delta_im;
  double max_abs_re = 0.0;
  double max_abs_im = 0.0;
};

/// delta_re = G - forward_even(f+), delta_im = Im H - Im forward_odd(f-).
/// cfg must cover the unit support: (2N+1) h = 1 within
/// kEffectiveLengthTolerance.
ErrorEnvelope delta_envelope(const TransformConfig& cfg, const EvaluationGrid& grid,
                             std::size_t threads = 1);

/// CSV with header "nu,delta_re,delta_im", 17 significant digits.
void write_envelope_csv(std::ostream& out, const ErrorEnvelope& envelope);

struct Support {
  double lower;
  double upper;
};

/// int_{support} f(t) exp(-2 pi i nu t) dt by adaptive quadrature to absolute
/// error `tol` in (0, 1e-6].
Complex quadrature_ft_oracle(const std::function<double(double)>& f, Support support,
                             double nu, double tol);

}  // namespace gsft
