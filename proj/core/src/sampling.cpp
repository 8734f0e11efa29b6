#include "gsft/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gsft/errors.hpp"

namespace gsft {

TransformConfig::TransformConfig(double step, double fitting, int half_count,
                                 int trunc_depth)
    : step_(step), fitting_(fitting), half_count_(half_count), trunc_depth_(trunc_depth) {
  if (!(std::isfinite(step) && step > 0.0)) {
    throw InvalidArgument("step h must be finite and > 0");
  }
  if (!(std::isfinite(fitting) && fitting > 0.0)) {
    throw InvalidArgument("fitting parameter c must be finite and > 0");
  }
  if (half_count < 1) throw InvalidArgument("N must be >= 1");
  if (trunc_depth < 0) throw InvalidArgument("trunc_depth must be >= 0");
}

TransformConfig TransformConfig::from_effective_length(double length, int half_count,
                                                       std::optional<double> fitting,
                                                       int trunc_depth) {
  if (!(std::isfinite(length) && length > 0.0)) {
    throw InvalidArgument("effective length must be finite and > 0");
  }
  if (half_count < 1) throw InvalidArgument("N must be >= 1");
  const double step = length / (2.0 * half_count + 1.0);
  TransformConfig cfg(step, fitting.value_or(step), half_count, trunc_depth);
  cfg.length_ = length;
  return cfg;
}

TransformConfig TransformConfig::with_effective_length(double step, double fitting,
                                                       int half_count, double length,
                                                       int trunc_depth) {
  TransformConfig cfg(step, fitting, half_count, trunc_depth);
  if (!(std::isfinite(length) && length > 0.0)) {
    throw InvalidArgument("effective length must be finite and > 0");
  }
  const double covered = (2.0 * half_count + 1.0) * step;
  if (std::abs(covered - length) > kEffectiveLengthTolerance * length) {
    throw InvalidArgument("(2N+1)h = " + std::to_string(covered) +
                          " does not match effective length " + std::to_string(length));
  }
  cfg.length_ = length;
  return cfg;
}

TransformConfig TransformConfig::with_trunc_depth(int depth) const {
  TransformConfig copy = *this;
  if (depth < 0) throw InvalidArgument("trunc_depth must be >= 0");
  copy.trunc_depth_ = depth;
  return copy;
}

template <SampleValue T>
BasicSampledFunction<T>::BasicSampledFunction(double step, std::vector<T> values)
    : step_(step), values_(std::move(values)) {
  if (!(std::isfinite(step) && step > 0.0)) {
    throw InvalidArgument("sample step must be finite and > 0");
  }
  if (values_.size() % 2 == 0) {
    throw ShapeMismatch("sample count must be odd (2N+1), got " +
                        std::to_string(values_.size()));
  }
}

template <SampleValue T>
const T& BasicSampledFunction<T>::at(int n) const {
  const int n_half = half_count();
  if (n < -n_half || n > n_half) {
    throw InvalidArgument("sample index " + std::to_string(n) + " outside [-" +
                          std::to_string(n_half) + ", " + std::to_string(n_half) + "]");
  }
  return values_[static_cast<std::size_t>(n + n_half)];
}

template <SampleValue T>
T BasicSampledFunction<T>::at_or_zero(int n) const noexcept {
  const int n_half = half_count();
  if (n < -n_half || n > n_half) return T{};
  return values_[static_cast<std::size_t>(n + n_half)];
}

template <SampleValue T>
void BasicSampledFunction<T>::check_against(const TransformConfig& cfg) const {
  if (half_count() != cfg.half_count()) {
    throw ShapeMismatch("samples carry N = " + std::to_string(half_count()) +
                        " but config has N = " + std::to_string(cfg.half_count()));
  }
  if (std::abs(step_ - cfg.step()) > 1e-12 * cfg.step()) {
    throw ShapeMismatch("sample step does not match config step h");
  }
}

template class BasicSampledFunction<double>;
template class BasicSampledFunction<std::complex<double>>;

ComplexSampledFunction to_complex(const SampledFunction& samples) {
  const auto src = samples.values();
  return ComplexSampledFunction(samples.step(),
                                std::vector<std::complex<double>>(src.begin(), src.end()));
}

double gaussian_kernel(double t, const TransformConfig& cfg) {
  const double u = t / cfg.fitting();
  return cfg.step() * std::exp(-u * u) * std::numbers::inv_sqrtpi / cfg.fitting();
}

template <SampleValue T>
T reconstruct(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
              double t) {
  samples.check_against(cfg);
  const int n_half = cfg.half_count();
  const double h = cfg.step();
  const double c = cfg.fitting();
  T sum{};
  for (int n = -n_half; n <= n_half; ++n) {
    const double u = (t - n * h) / c;
    sum += std::exp(-u * u) * samples.at(n);
  }
  return (h * std::numbers::inv_sqrtpi / c) * sum;
}

namespace {

// sin(pi u) / (pi u), exact at integers.
double sinc_pi(double u) {
  const double k = std::round(u);
  const double r = u - k;
  if (std::abs(r) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(u))) {
    return k == 0.0 ? 1.0 : 0.0;
  }
  // sin(pi u) = (-1)^k sin(pi r), accurate near the zeros.
  const double sign = std::fmod(std::abs(k), 2.0) == 0.0 ? 1.0 : -1.0;
  return sign * std::sin(std::numbers::pi * r) / (std::numbers::pi * u);
}

}  // namespace

template <SampleValue T>
T sinc_reconstruct(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                   double t) {
  samples.check_against(cfg);
  const int n_half = cfg.half_count();
  const double h = cfg.step();
  T sum{};
  for (int n = -n_half; n <= n_half; ++n) {
    sum += sinc_pi(t / h - n) * samples.at(n);
  }
  return sum;
}

template double reconstruct(const SampledFunction&, const TransformConfig&, double);
template std::complex<double> reconstruct(const ComplexSampledFunction&,
                                          const TransformConfig&, double);
template double sinc_reconstruct(const SampledFunction&, const TransformConfig&, double);
template std::complex<double> sinc_reconstruct(const ComplexSampledFunction&,
                                               const TransformConfig&, double);

double oscillation_metric(const TransformConfig& cfg, double a, double b) {
  if (!(a <= b)) throw InvalidArgument("oscillation_metric: interval must satisfy a <= b");
  const double half_window = 0.5 * static_cast<double>(cfg.sample_count()) * cfg.step();
  if (a < -half_window || b > half_window) {
    throw InvalidArgument("oscillation_metric: interval [" + std::to_string(a) + ", " +
                          std::to_string(b) + "] leaves the window of half-width " +
                          std::to_string(half_window));
  }
  const auto ones = SampledFunction::from_function(cfg, [](double) { return 1.0; });
  if (a == b) return std::abs(reconstruct(ones, cfg, a) - 1.0);

  double worst = 0.0;
  const double span = b - a;
  const auto last = static_cast<double>(kOscillationGridPoints - 1);
  for (std::size_t i = 0; i < kOscillationGridPoints; ++i) {
    const double t = a + span * (static_cast<double>(i) / last);
    worst = std::max(worst, std::abs(reconstruct(ones, cfg, t) - 1.0));
  }
  return worst;
}

}  // namespace gsft
