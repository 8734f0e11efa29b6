#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "gsft/faddeeva.hpp"
#include "gsft/sampling.hpp"

namespace gsft {

/// Strictly increasing abscissae (nu for forward, t for inverse).
class EvaluationGrid {
 public:
  explicit EvaluationGrid(std::vector<double> points);

  /// `count` points from `min` to `max` inclusive. count == 1 gives {min}.
  static EvaluationGrid uniform(double min, double max, std::size_t count);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const noexcept { return points_[i]; }

  friend bool operator==(const EvaluationGrid&, const EvaluationGrid&) = default;

 private:
  std::vector<double> points_;
};

struct Spectrum {
  EvaluationGrid grid;
  std::vector<Complex> values;
};

enum class Direction { forward, inverse };

enum class Formulation { weighted, truncated, table, harmonic };

std::string_view to_string(Direction d) noexcept;
std::string_view to_string(Formulation f) noexcept;
/// Throws InvalidArgument on an unknown name.
Formulation parse_formulation(std::string_view name);

/// h exp(-(nh/c)^2) f(nh) / 2. With spectrum samples this is the starred
/// coefficient of the inverse transform.
template <SampleValue T>
Complex alpha(const BasicSampledFunction<T>& samples, const TransformConfig& cfg, int n);

/// exp(-a^2) w(x - ia) for any real a, without overflow.
Complex damped_w(double x, double a);

// Full weighted sums of Faddeeva functions over n = -N..N.
template <SampleValue T>
Complex forward_weighted(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                         double nu);
template <SampleValue T>
Complex inverse_weighted(const BasicSampledFunction<T>& spectrum_samples,
                         const TransformConfig& cfg, double t);

// Weighted sums restricted to n = -trunc_depth..N. Throw if trunc_depth > N.
template <SampleValue T>
Complex forward_truncated(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                          double nu);
template <SampleValue T>
Complex inverse_truncated(const BasicSampledFunction<T>& spectrum_samples,
                          const TransformConfig& cfg, double t);

// Damping harmonic series h exp(-(pi c x)^2) sum_n f(nh) exp(-+ 2 pi i x nh).
template <SampleValue T>
Complex forward_harmonic(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                         double nu);
template <SampleValue T>
Complex inverse_harmonic(const BasicSampledFunction<T>& spectrum_samples,
                         const TransformConfig& cfg, double t);

/// Symmetry tolerance for forward_even / forward_odd inputs.
inline constexpr double kParityTolerance = 1e-12;

/// Cosine-only transform of even samples. Returns the (real) spectrum value.
double forward_even(const SampledFunction& even_samples, const TransformConfig& cfg, double nu);
/// Sine-only transform of odd samples; the result is purely imaginary.
Complex forward_odd(const SampledFunction& odd_samples, const TransformConfig& cfg, double nu);

/// Precomputed (h/2) exp(-(nh/c)^2) w(-+pi c x, -nh/c) for n = -trunc_depth..N
/// on every grid point. Immutable; safe to share between threads.
class WeightTable {
 public:
  WeightTable(TransformConfig config, EvaluationGrid grid, Direction direction,
              std::vector<Complex> beta1, std::vector<Complex> beta2);

  const TransformConfig& config() const noexcept { return config_; }
  const EvaluationGrid& grid() const noexcept { return grid_; }
  Direction direction() const noexcept { return direction_; }

  int first_index() const noexcept { return -config_.trunc_depth(); }
  int last_index() const noexcept { return config_.half_count(); }
  std::size_t row_count() const noexcept {
    return static_cast<std::size_t>(last_index() - first_index() + 1);
  }

  /// Entry for sample index n at grid position k.
  Complex beta1(int n, std::size_t k) const;
  Complex beta2(int n, std::size_t k) const;

  /// Row-major (row = n - first_index()) storage.
  std::span<const Complex> beta1_data() const noexcept { return beta1_; }
  std::span<const Complex> beta2_data() const noexcept { return beta2_; }

 private:
  std::size_t offset(int n, std::size_t k) const;

  TransformConfig config_;
  EvaluationGrid grid_;
  Direction direction_;
  std::vector<Complex> beta1_;
  std::vector<Complex> beta2_;
};

/// Throws if trunc_depth > N. `threads` == 0 picks the hardware concurrency.
WeightTable precompute_weights(const TransformConfig& cfg, const EvaluationGrid& grid,
                               Direction direction, std::size_t threads = 1);

template <SampleValue T>
Spectrum forward_with_table(const BasicSampledFunction<T>& samples, const WeightTable& table);
template <SampleValue T>
Spectrum inverse_with_table(const BasicSampledFunction<T>& spectrum_samples,
                            const WeightTable& table);

/// Evaluates one formulation over a grid. Grid points are independent, so
/// the result is bit-identical for any thread count.
template <SampleValue T>
Spectrum evaluate(Formulation formulation, Direction direction,
                  const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                  const EvaluationGrid& grid, std::size_t threads = 1);

/// Binary table layout (little-endian host order):
///   8-byte magic "GSFTWT01", f64 h, f64 c, i64 N, i64 trunc_depth,
///   u8 direction (0 forward, 1 inverse), u64 grid length, grid f64 values,
///   beta1 rows then beta2 rows, each entry as f64 re, f64 im.
void write_weight_table(std::ostream& out, const WeightTable& table);
WeightTable read_weight_table(std::istream& in);

}  // namespace gsft
