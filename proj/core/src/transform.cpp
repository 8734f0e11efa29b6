#include "gsft/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "gsft/errors.hpp"
#include "parallel.hpp"

namespace gsft {
namespace {

constexpr double kPi = std::numbers::pi;

/// Real-axis coordinate of the Faddeeva argument paired with f(nh) (beta1).
/// Forward: -pi c nu. Inverse: +pi c t.
double faddeeva_abscissa(const TransformConfig& cfg, Direction d, double point) {
  const double x = kPi * cfg.fitting() * point;
  return d == Direction::forward ? -x : x;
}

double damping(const TransformConfig& cfg, double point) {
  const double x = kPi * cfg.fitting() * point;
  return std::exp(-x * x);
}

/// (h/2) exp(-(nh/c)^2) w(x, -nh/c).
Complex beta(const TransformConfig& cfg, int n, double x) {
  return 0.5 * cfg.step() * damped_w(x, n * cfg.step() / cfg.fitting());
}

void check_trunc_depth(const TransformConfig& cfg) {
  if (cfg.trunc_depth() > cfg.half_count()) {
    throw InvalidArgument("trunc_depth " + std::to_string(cfg.trunc_depth()) +
                          " exceeds N = " + std::to_string(cfg.half_count()));
  }
}

/// sum_{n=lo}^{N} f(nh) beta1_n + sum_{n=lo}^{N} f(-nh) beta2_n.
/// Order is fixed (ascending n, beta1 sum then beta2 sum) and shared with the
/// table path so both agree bit for bit.
template <SampleValue T>
Complex weighted_sum(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                     Direction d, double point, int lo) {
  samples.check_against(cfg);
  const double x = faddeeva_abscissa(cfg, d, point);
  Complex sum1{};
  Complex sum2{};
  for (int n = lo; n <= cfg.half_count(); ++n) {
    sum1 += samples.at(n) * beta(cfg, n, x);
    sum2 += samples.at(-n) * beta(cfg, n, -x);
  }
  return sum1 + sum2;
}

template <SampleValue T>
Complex harmonic_sum(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                     double sign, double point) {
  samples.check_against(cfg);
  const double h = cfg.step();
  Complex sum{};
  for (int n = -cfg.half_count(); n <= cfg.half_count(); ++n) {
    const double phase = sign * 2.0 * kPi * point * (n * h);
    sum += samples.at(n) * Complex(std::cos(phase), std::sin(phase));
  }
  return h * damping(cfg, point) * sum;
}

void check_even(const SampledFunction& s) {
  for (int n = 1; n <= s.half_count(); ++n) {
    if (std::abs(s.at(n) - s.at(-n)) > kParityTolerance) {
      throw InvalidArgument("samples are not even: f(" + std::to_string(n) +
                            "h) != f(-" + std::to_string(n) + "h)");
    }
  }
}

void check_odd(const SampledFunction& s) {
  if (std::abs(s.at(0)) > kParityTolerance) {
    throw InvalidArgument("odd samples require f(0) = 0");
  }
  for (int n = 1; n <= s.half_count(); ++n) {
    if (std::abs(s.at(n) + s.at(-n)) > kParityTolerance) {
      throw InvalidArgument("samples are not odd: f(" + std::to_string(n) +
                            "h) != -f(-" + std::to_string(n) + "h)");
    }
  }
}

}  // namespace

EvaluationGrid::EvaluationGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("evaluation grid must not be empty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) throw InvalidArgument("evaluation grid point is not finite");
    if (i > 0 && !(points_[i - 1] < points_[i])) {
      throw InvalidArgument("evaluation grid must be strictly increasing (index " +
                            std::to_string(i) + ")");
    }
  }
}

EvaluationGrid EvaluationGrid::uniform(double min, double max, std::size_t count) {
  if (count == 0) throw InvalidArgument("grid count must be >= 1");
  if (count == 1) return EvaluationGrid({min});
  if (!(min < max)) throw InvalidArgument("grid requires min < max when count > 1");
  std::vector<double> pts(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    pts[i] = min + (max - min) * (static_cast<double>(i) / last);
  }
  pts.back() = max;
  return EvaluationGrid(std::move(pts));
}

std::string_view to_string(Direction d) noexcept {
  return d == Direction::forward ? "forward" : "inverse";
}

std::string_view to_string(Formulation f) noexcept {
  switch (f) {
    case Formulation::weighted: return "weighted";
    case Formulation::truncated: return "truncated";
    case Formulation::table: return "table";
    case Formulation::harmonic: return "harmonic";
  }
  return "unknown";
}

Formulation parse_formulation(std::string_view name) {
  for (const auto f : {Formulation::weighted, Formulation::truncated, Formulation::table,
                       Formulation::harmonic}) {
    if (name == to_string(f)) return f;
  }
  throw InvalidArgument("unknown formulation '" + std::string(name) +
                        "' (expected weighted, truncated, table or harmonic)");
}

template <SampleValue T>
Complex alpha(const BasicSampledFunction<T>& samples, const TransformConfig& cfg, int n) {
  samples.check_against(cfg);
  const double a = n * cfg.step() / cfg.fitting();
  return 0.5 * cfg.step() * std::exp(-a * a) * Complex(samples.at(n));
}

Complex damped_w(double x, double a) {
  if (a >= 0.0) return w_weighted(x, a);
  // Upper half-plane: |w| <= 1, so the product only underflows.
  const double gauss = std::exp(-a * a);
  if (gauss == 0.0) return {};
  return gauss * w(Complex(x, -a));
}

template <SampleValue T>
Complex forward_weighted(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                         double nu) {
  return weighted_sum(samples, cfg, Direction::forward, nu, -cfg.half_count());
}

template <SampleValue T>
Complex inverse_weighted(const BasicSampledFunction<T>& spectrum_samples,
                         const TransformConfig& cfg, double t) {
  return weighted_sum(spectrum_samples, cfg, Direction::inverse, t, -cfg.half_count());
}

template <SampleValue T>
Complex forward_truncated(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                          double nu) {
  check_trunc_depth(cfg);
  return weighted_sum(samples, cfg, Direction::forward, nu, -cfg.trunc_depth());
}

template <SampleValue T>
Complex inverse_truncated(const BasicSampledFunction<T>& spectrum_samples,
                          const TransformConfig& cfg, double t) {
  check_trunc_depth(cfg);
  return weighted_sum(spectrum_samples, cfg, Direction::inverse, t, -cfg.trunc_depth());
}

template <SampleValue T>
Complex forward_harmonic(const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                         double nu) {
  return harmonic_sum(samples, cfg, -1.0, nu);
}

template <SampleValue T>
Complex inverse_harmonic(const BasicSampledFunction<T>& spectrum_samples,
                         const TransformConfig& cfg, double t) {
  return harmonic_sum(spectrum_samples, cfg, 1.0, t);
}

double forward_even(const SampledFunction& even_samples, const TransformConfig& cfg,
                    double nu) {
  even_samples.check_against(cfg);
  check_even(even_samples);
  const double h = cfg.step();
  double sum = 0.5 * even_samples.at(0);
  for (int n = 1; n <= cfg.half_count(); ++n) {
    sum += even_samples.at(n) * std::cos(2.0 * kPi * nu * (n * h));
  }
  return 2.0 * h * damping(cfg, nu) * sum;
}

Complex forward_odd(const SampledFunction& odd_samples, const TransformConfig& cfg,
                    double nu) {
  odd_samples.check_against(cfg);
  check_odd(odd_samples);
  const double h = cfg.step();
  double sum = 0.0;
  for (int n = 1; n <= cfg.half_count(); ++n) {
    sum += odd_samples.at(n) * std::sin(2.0 * kPi * nu * (n * h));
  }
  return {0.0, -2.0 * h * damping(cfg, nu) * sum};
}

WeightTable::WeightTable(TransformConfig config, EvaluationGrid grid, Direction direction,
                         std::vector<Complex> beta1, std::vector<Complex> beta2)
    : config_(std::move(config)),
      grid_(std::move(grid)),
      direction_(direction),
      beta1_(std::move(beta1)),
      beta2_(std::move(beta2)) {
  check_trunc_depth(config_);
  const std::size_t expected = row_count() * grid_.size();
  if (beta1_.size() != expected || beta2_.size() != expected) {
    throw ShapeMismatch("weight table holds " + std::to_string(beta1_.size()) + "/" +
                        std::to_string(beta2_.size()) + " entries, expected " +
                        std::to_string(expected));
  }
}

std::size_t WeightTable::offset(int n, std::size_t k) const {
  if (n < first_index() || n > last_index()) {
    throw InvalidArgument("weight table row " + std::to_string(n) + " out of range");
  }
  if (k >= grid_.size()) throw InvalidArgument("weight table column out of range");
  return static_cast<std::size_t>(n - first_index()) * grid_.size() + k;
}

Complex WeightTable::beta1(int n, std::size_t k) const { return beta1_[offset(n, k)]; }
Complex WeightTable::beta2(int n, std::size_t k) const { return beta2_[offset(n, k)]; }

WeightTable precompute_weights(const TransformConfig& cfg, const EvaluationGrid& grid,
                               Direction direction, std::size_t threads) {
  check_trunc_depth(cfg);
  const int lo = -cfg.trunc_depth();
  const auto rows = static_cast<std::size_t>(cfg.half_count() - lo + 1);
  const std::size_t cols = grid.size();
  std::vector<Complex> beta1(rows * cols);
  std::vector<Complex> beta2(rows * cols);
  detail::parallel_for(cols, threads, [&](std::size_t k) {
    const double x = faddeeva_abscissa(cfg, direction, grid[k]);
    for (std::size_t r = 0; r < rows; ++r) {
      const int n = lo + static_cast<int>(r);
      beta1[r * cols + k] = beta(cfg, n, x);
      beta2[r * cols + k] = beta(cfg, n, -x);
    }
  });
  return WeightTable(cfg, grid, direction, std::move(beta1), std::move(beta2));
}

namespace {

template <SampleValue T>
Spectrum apply_table(const BasicSampledFunction<T>& samples, const WeightTable& table,
                     Direction expected) {
  if (table.direction() != expected) {
    throw InvalidArgument("weight table direction is " +
                          std::string(to_string(table.direction())) + ", expected " +
                          std::string(to_string(expected)));
  }
  samples.check_against(table.config());
  const std::size_t cols = table.grid().size();
  const auto b1 = table.beta1_data();
  const auto b2 = table.beta2_data();
  const int lo = table.first_index();
  std::vector<Complex> values(cols);
  for (std::size_t k = 0; k < cols; ++k) {
    Complex sum1{};
    Complex sum2{};
    for (int n = lo; n <= table.last_index(); ++n) {
      const std::size_t idx = static_cast<std::size_t>(n - lo) * cols + k;
      sum1 += samples.at(n) * b1[idx];
      sum2 += samples.at(-n) * b2[idx];
    }
    values[k] = sum1 + sum2;
  }
  return {table.grid(), std::move(values)};
}

}  // namespace

template <SampleValue T>
Spectrum forward_with_table(const BasicSampledFunction<T>& samples, const WeightTable& table) {
  return apply_table(samples, table, Direction::forward);
}

template <SampleValue T>
Spectrum inverse_with_table(const BasicSampledFunction<T>& spectrum_samples,
                            const WeightTable& table) {
  return apply_table(spectrum_samples, table, Direction::inverse);
}

template <SampleValue T>
Spectrum evaluate(Formulation formulation, Direction direction,
                  const BasicSampledFunction<T>& samples, const TransformConfig& cfg,
                  const EvaluationGrid& grid, std::size_t threads) {
  samples.check_against(cfg);
  if (formulation == Formulation::table) {
    const WeightTable table = precompute_weights(cfg, grid, direction, threads);
    return apply_table(samples, table, direction);
  }
  if (formulation == Formulation::truncated) check_trunc_depth(cfg);

  const bool forward = direction == Direction::forward;
  std::vector<Complex> values(grid.size());
  detail::parallel_for(grid.size(), threads, [&](std::size_t k) {
    const double x = grid[k];
    switch (formulation) {
      case Formulation::weighted:
        values[k] = forward ? forward_weighted(samples, cfg, x) : inverse_weighted(samples, cfg, x);
        break;
      case Formulation::truncated:
        values[k] = forward ? forward_truncated(samples, cfg, x) : inverse_truncated(samples, cfg, x);
        break;
      case Formulation::harmonic:
        values[k] = forward ? forward_harmonic(samples, cfg, x) : inverse_harmonic(samples, cfg, x);
        break;
      case Formulation::table:
        break;
    }
  });
  return {grid, std::move(values)};
}

namespace {

constexpr char kTableMagic[8] = {'G', 'S', 'F', 'T', 'W', 'T', '0', '1'};

template <class V>
void put(std::ostream& out, V value) {
  char bytes[sizeof(V)];
  std::memcpy(bytes, &value, sizeof(V));
  out.write(bytes, sizeof(V));
}

template <class V>
V get(std::istream& in) {
  char bytes[sizeof(V)];
  if (!in.read(bytes, sizeof(V))) throw Error("weight table: unexpected end of data");
  V value;
  std::memcpy(&value, bytes, sizeof(V));
  return value;
}

}  // namespace

void write_weight_table(std::ostream& out, const WeightTable& table) {
  const TransformConfig& cfg = table.config();
  out.write(kTableMagic, sizeof(kTableMagic));
  put<double>(out, cfg.step());
  put<double>(out, cfg.fitting());
  put<std::int64_t>(out, cfg.half_count());
  put<std::int64_t>(out, cfg.trunc_depth());
  put<std::uint8_t>(out, table.direction() == Direction::forward ? 0 : 1);
  put<std::uint64_t>(out, table.grid().size());
  for (const double p : table.grid().points()) put<double>(out, p);
  for (const auto data : {table.beta1_data(), table.beta2_data()}) {
    for (const Complex& v : data) {
      put<double>(out, v.real());
      put<double>(out, v.imag());
    }
  }
  if (!out) throw Error("weight table: write failed");
}

WeightTable read_weight_table(std::istream& in) {
  char magic[sizeof(kTableMagic)];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kTableMagic, sizeof(magic)) != 0) {
    throw InvalidArgument("weight table: bad magic");
  }
  const auto h = get<double>(in);
  const auto c = get<double>(in);
  const auto n_half = get<std::int64_t>(in);
  const auto depth = get<std::int64_t>(in);
  const auto dir = get<std::uint8_t>(in);
  const auto count = get<std::uint64_t>(in);
  if (n_half < 1 || n_half > (1 << 24) || depth < 0 || depth > n_half || dir > 1 ||
      count == 0 || count > (std::uint64_t{1} << 32)) {
    throw InvalidArgument("weight table: corrupt header");
  }
  const TransformConfig cfg(h, c, static_cast<int>(n_half), static_cast<int>(depth));
  std::vector<double> points(count);
  for (auto& p : points) p = get<double>(in);
  EvaluationGrid grid(std::move(points));

  const std::size_t entries = static_cast<std::size_t>(n_half + depth + 1) * count;
  auto read_block = [&] {
    std::vector<Complex> block(entries);
    for (auto& v : block) {
      const double re = get<double>(in);
      const double im = get<double>(in);
      v = {re, im};
    }
    return block;
  };
  auto beta1 = read_block();
  auto beta2 = read_block();
  return WeightTable(cfg, std::move(grid), dir == 0 ? Direction::forward : Direction::inverse,
                     std::move(beta1), std::move(beta2));
}

#define GSFT_INSTANTIATE(T)                                                                     \
  template Complex alpha(const BasicSampledFunction<T>&, const TransformConfig&, int);         \
  template Complex forward_weighted(const BasicSampledFunction<T>&, const TransformConfig&,    \
                                    double);                                                   \
  template Complex inverse_weighted(const BasicSampledFunction<T>&, const TransformConfig&,    \
                                    double);                                                   \
  template Complex forward_truncated(const BasicSampledFunction<T>&, const TransformConfig&,   \
                                     double);                                                  \
  template Complex inverse_truncated(const BasicSampledFunction<T>&, const TransformConfig&,   \
                                     double);                                                  \
  template Complex forward_harmonic(const BasicSampledFunction<T>&, const TransformConfig&,    \
                                    double);                                                   \
  template Complex inverse_harmonic(const BasicSampledFunction<T>&, const TransformConfig&,    \
                                    double);                                                   \
  template Spectrum forward_with_table(const BasicSampledFunction<T>&, const WeightTable&);    \
  template Spectrum inverse_with_table(const BasicSampledFunction<T>&, const WeightTable&);    \
  template Spectrum evaluate(Formulation, Direction, const BasicSampledFunction<T>&,           \
                             const TransformConfig&, const EvaluationGrid&, std::size_t);

GSFT_INSTANTIATE(double)
GSFT_INSTANTIATE(Complex)

#undef GSFT_INSTANTIATE

}  // namespace gsft
