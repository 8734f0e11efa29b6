#pragma once

#include <complex>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gsft {

/// Relative tolerance for (2N+1) h == effective length. Loose enough to admit
/// steps printed to four significant digits (0.0099 for N = 50).
inline constexpr double kEffectiveLengthTolerance = 5e-4;

/// Sampling step h, Gaussian fitting parameter c, half sample count N and
/// the number of negative-index terms kept by the truncated transforms.
class TransformConfig {
 public:
  static constexpr int kDefaultTruncDepth = 3;

  TransformConfig(double step, double fitting, int half_count,
                  int trunc_depth = kDefaultTruncDepth);

  /// h = length / (2N + 1). The fitting parameter defaults to h.
  static TransformConfig from_effective_length(
      double length, int half_count, std::optional<double> fitting = {},
      int trunc_depth = kDefaultTruncDepth);

  /// Explicit h checked against a declared effective length.
  static TransformConfig with_effective_length(
      double step, double fitting, int half_count, double length,
      int trunc_depth = kDefaultTruncDepth);

  double step() const noexcept { return step_; }
  double fitting() const noexcept { return fitting_; }
  int half_count() const noexcept { return half_count_; }
  int trunc_depth() const noexcept { return trunc_depth_; }
  std::size_t sample_count() const noexcept {
    return 2 * static_cast<std::size_t>(half_count_) + 1;
  }
  std::optional<double> effective_length() const noexcept { return length_; }

  /// Copy with a different truncation depth.
  TransformConfig with_trunc_depth(int depth) const;

 private:
  double step_;
  double fitting_;
  int half_count_;
  int trunc_depth_;
  std::optional<double> length_;
};

template <class T>
concept SampleValue =
    std::same_as<T, double> || std::same_as<T, std::complex<double>>;

/// Equidistant samples f(nh), n = -N..N.
template <SampleValue T>
class BasicSampledFunction {
 public:
  using value_type = T;

  /// `values` holds f(-Nh) .. f(Nh); its length must be odd.
  BasicSampledFunction(double step, std::vector<T> values);

  template <class F>
  static BasicSampledFunction from_function(const TransformConfig& cfg, F&& f) {
    const int n_half = cfg.half_count();
    std::vector<T> values;
    values.reserve(cfg.sample_count());
    for (int n = -n_half; n <= n_half; ++n) {
      values.push_back(static_cast<T>(f(n * cfg.step())));
    }
    return BasicSampledFunction(cfg.step(), std::move(values));
  }

  static BasicSampledFunction zeros(const TransformConfig& cfg) {
    return BasicSampledFunction(cfg.step(),
                                std::vector<T>(cfg.sample_count(), T{}));
  }

  double step() const noexcept { return step_; }
  int half_count() const noexcept {
    return static_cast<int>(values_.size() / 2);
  }
  std::size_t size() const noexcept { return values_.size(); }

  /// f(nh) for -N <= n <= N.
  const T& at(int n) const;
  /// f(nh), or zero outside -N..N.
  T at_or_zero(int n) const noexcept;

  std::span<const T> values() const noexcept { return values_; }

  /// Throws ShapeMismatch unless N and h agree with `cfg`.
  void check_against(const TransformConfig& cfg) const;

 private:
  double step_;
  std::vector<T> values_;
};

using SampledFunction = BasicSampledFunction<double>;
using ComplexSampledFunction = BasicSampledFunction<std::complex<double>>;

ComplexSampledFunction to_complex(const SampledFunction& samples);

/// h exp(-(t/c)^2) / (c sqrt(pi)).
double gaussian_kernel(double t, const TransformConfig& cfg);

/// Gaussian sampling series (h / (c sqrt(pi))) sum_n exp(-((t - nh)/c)^2) f(nh).
template <SampleValue T>
T reconstruct(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
              double t);

/// Cardinal series sum_n sinc(pi (t - nh) / h) f(nh). Comparison only.
template <SampleValue T>
T sinc_reconstruct(const BasicSampledFunction<T>& samples,
                   const TransformConfig& cfg, double t);

/// Points per interval used by oscillation_metric.
inline constexpr std::size_t kOscillationGridPoints = 10000;

/// max |reconstruct(f = 1)(t) - 1| over a uniform grid on [a, b]. The
/// interval must lie inside the window |t| <= (2N+1) h / 2.
double oscillation_metric(const TransformConfig& cfg, double a, double b);

}  // namespace gsft
