// Acceptance suite: one PASS/FAIL line per criterion. With no arguments every
// criterion runs; otherwise only the listed ids (1..9). Exits with 1 when any
// selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "gsft/faddeeva.hpp"
#include "gsft/reference.hpp"
#include "gsft/sampling.hpp"
#include "gsft/transform.hpp"
#include "oracles.hpp"

namespace {

using gsft::Complex;
using gsft::EvaluationGrid;
using gsft::SampledFunction;
using gsft::TransformConfig;
using gsft::WaveletPart;
using gsft::testing::component_error;

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass;
  std::string detail;
  std::vector<std::string> notes = {};
};

EvaluationGrid figure_grid() { return EvaluationGrid::uniform(-10.0, 10.0, 2001); }

/// Sup-norms restricted to |nu| <= 3, reported as a diagnostic only.
std::string central_band(const gsft::ErrorEnvelope& env) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < env.grid.size(); ++k) {
    if (std::abs(env.grid[k]) > 3.0) continue;
    re = std::max(re, std::abs(env.delta_re[k]));
    im = std::max(im, std::abs(env.delta_im[k]));
  }
  return fmt::format("diagnostic |nu|<=3: max|dRe|={:.3e} max|dIm|={:.3e}", re, im);
}

Verdict envelope_criterion(double step, int n_half, double bound) {
  const auto cfg = TransformConfig::with_effective_length(step, step, n_half, gsft::kExampleLength);
  const auto env = gsft::delta_envelope(cfg, figure_grid(), 0);
  const bool pass = env.max_abs_re <= bound && env.max_abs_im <= bound;
  return {pass,
          fmt::format("N={} h=c={} nu in [-10,10]: max|dRe|={:.3e} max|dIm|={:.3e} bound={:.0e}", n_half,
                      step, env.max_abs_re, env.max_abs_im, bound),
          {central_band(env)}};
}

Verdict criterion_fig6() { return envelope_criterion(0.0099, 50, 1e-3); }

Verdict criterion_fig7() { return envelope_criterion(0.00166389, 300, 3e-5); }

Verdict criterion_faddeeva() {
  std::vector<Complex> points;
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j < 21; ++j) points.emplace_back(-6.0 + 0.6 * i, -6.0 + 0.6 * j);
  }
  const std::size_t grid_points = points.size();
  auto rng = gsft::testing::make_rng();
  for (int i = 0; i < 100; ++i) {
    points.emplace_back(gsft::testing::uniform(rng, -6.0, 6.0), -gsft::testing::uniform(rng, 0.0, 4.0));
  }

  // Below the real axis both sides carry rounding of order eps * e^{y^2},
  // so the tolerance is scaled by the oracle's own resolution there.
  std::size_t failures = 0;
  double worst_upper = 0.0;
  double worst_ratio = 0.0;
  for (const Complex z : points) {
    const double err = component_error(gsft::w(z), gsft::w_quadrature_oracle(z, 1e-12));
    const double scale = gsft::testing::oracle_scale(z);
    if (z.imag() >= 0.0) worst_upper = std::max(worst_upper, err);
    worst_ratio = std::max(worst_ratio, err / scale);
    if (err > 1e-10 * scale) ++failures;
  }
  return {failures == 0,
          fmt::format("{} grid + {} lower-half-plane points: upper max err={:.2e}, max err/scale={:.2e}, "
                      "{} over tolerance",
                      grid_points, points.size() - grid_points, worst_upper, worst_ratio, failures)};
}

Verdict criterion_equivalence() {
  auto rng = gsft::testing::make_rng(4242);
  const auto grid = EvaluationGrid::uniform(-10.0, 10.0, 201);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n_half = 1 + static_cast<int>(rng() % 64);
    const double h = gsft::testing::uniform(rng, 0.001, 0.3);
    const TransformConfig cfg(h, h, n_half);
    const auto f = SampledFunction::from_function(cfg, [&](double) { return gsft::testing::uniform(rng, -1.0, 1.0); });
    for (const double nu : grid.points()) {
      worst = std::max(worst, std::abs(gsft::forward_weighted(f, cfg, nu) - gsft::forward_harmonic(f, cfg, nu)));
    }
  }
  return {worst <= 1e-10, fmt::format("50 random vectors x 201 nu: max|weighted - harmonic|={:.2e}", worst)};
}

Verdict criterion_truncation() {
  const auto cfg = TransformConfig::with_effective_length(0.0099, 0.0099, 50, gsft::kExampleLength);
  const auto even = gsft::sample_example(WaveletPart::even_part, cfg);
  const auto grid = figure_grid();
  double peak = 0.0;
  double worst = 0.0;
  for (const double nu : grid.points()) {
    const Complex full = gsft::forward_weighted(even, cfg, nu);
    peak = std::max(peak, std::abs(full));
    worst = std::max(worst, std::abs(gsft::forward_truncated(even, cfg, nu) - full));
  }
  const double relative = worst / peak;
  return {relative <= 1e-6,
          fmt::format("trunc_depth={}: max|truncated - weighted|/max|F|={:.2e}", cfg.trunc_depth(), relative)};
}

Verdict criterion_parity() {
  const auto cfg = TransformConfig::with_effective_length(0.0099, 0.0099, 50, gsft::kExampleLength);
  const auto even = gsft::sample_example(WaveletPart::even_part, cfg);
  const auto odd = gsft::sample_example(WaveletPart::odd_part, cfg);
  double even_im = 0.0;
  double odd_re = 0.0;
  for (const double nu : figure_grid().points()) {
    for (const Complex v : {gsft::forward_harmonic(even, cfg, nu), gsft::forward_weighted(even, cfg, nu),
                            Complex(gsft::forward_even(even, cfg, nu), 0.0)}) {
      even_im = std::max(even_im, std::abs(v.imag()));
    }
    for (const Complex v : {gsft::forward_harmonic(odd, cfg, nu), gsft::forward_weighted(odd, cfg, nu),
                            gsft::forward_odd(odd, cfg, nu)}) {
      odd_re = std::max(odd_re, std::abs(v.real()));
    }
  }
  return {even_im <= 1e-12 && odd_re <= 1e-12,
          fmt::format("even input max|Im F|={:.2e}, odd input max|Re F|={:.2e}", even_im, odd_re)};
}

Verdict criterion_oracle() {
  const auto cfg = TransformConfig::with_effective_length(0.00166389, 0.00166389, 300, gsft::kExampleLength);
  const auto full = gsft::sample_example(WaveletPart::full, cfg);
  const auto grid = figure_grid();
  const auto spectrum = gsft::evaluate(gsft::Formulation::harmonic, gsft::Direction::forward, full, cfg, grid, 0);
  double worst = 0.0;
  double central = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Complex oracle = gsft::quadrature_ft_oracle(gsft::example_f, {-0.5, 0.5}, grid[k], 1e-10);
    const double err = std::abs(spectrum.values[k] - oracle);
    worst = std::max(worst, err);
    if (std::abs(grid[k]) <= 3.0) central = std::max(central, err);
  }
  return {worst <= 5e-5,
          fmt::format("N=300 nu in [-10,10]: max|harmonic - quadrature|={:.3e} bound=5e-05", worst),
          {fmt::format("diagnostic |nu|<=3: max error={:.3e}", central)}};
}

Verdict criterion_window() {
  // Frozen from a direct numpy summation on 10^4 points of [-2, 2]. The
  // metric is |S - 1| with S near 1, so agreement is limited to a few ulps
  // of 1 in absolute terms.
  const std::map<double, double> frozen = {
      {0.15, 0.057275236588663514}, {0.2, 0.0036123393707109264}, {0.25, 0.00010619100681164007}};
  std::vector<double> metrics;
  bool matches = true;
  for (const auto& [c, expected] : frozen) {
    const double m = gsft::oscillation_metric(TransformConfig(0.25, c, 10), -2.0, 2.0);
    metrics.push_back(m);
    matches = matches && std::abs(m - expected) <= 1e-13;
  }
  const bool decreasing = metrics[0] > metrics[1] && metrics[1] > metrics[2];
  return {decreasing && matches && metrics[2] <= 1e-3,
          fmt::format("c=0.15,0.2,0.25: {:.6e} > {:.6e} > {:.6e} (frozen values {})", metrics[0], metrics[1],
                      metrics[2], matches ? "matched" : "MISMATCHED")};
}

Verdict criterion_special_functions() {
  using gsft::testing::simpson;
  constexpr std::size_t kPanels = 40000;
  const auto integral = [](auto&& f, double x) { return simpson(f, 0.0, x, kPanels); };

  double worst = 0.0;
  std::string worst_name;
  const auto track = [&](const std::string& name, double err) {
    if (err > worst) {
      worst = err;
      worst_name = name;
    }
  };
  const auto check_at = [&](double x) {
    const double erf_ref =
        2.0 * std::numbers::inv_sqrtpi * integral([](double u) { return std::exp(-u * u); }, x);
    track("erf", component_error(gsft::erf_complex({x, 0.0}), {erf_ref, 0.0}));

    const double dawson_ref =
        integral([x](double u) { return std::exp((u - x) * (u + x)); }, x);
    track("dawson", component_error(gsft::dawson({x, 0.0}), {dawson_ref, 0.0}));

    const double fc = integral([](double u) { return std::cos(0.5 * kPi * u * u); }, x);
    const double fs = integral([](double u) { return std::sin(0.5 * kPi * u * u); }, x);
    track("fresnel", component_error(gsft::fresnel({x, 0.0}), {fc, fs}));

    const double normal_ref =
        integral([](double u) { return std::exp(-0.5 * u * u); }, x) / std::sqrt(2.0 * kPi);
    track("normal_cdf", component_error(gsft::normal_cdf({x, 0.0}), {normal_ref, 0.0}));

    // Voigt profile with y = 1 as a convolution over the real line.
    const double voigt_ref =
        simpson([x](double t) { return std::exp(-t * t) / ((x - t) * (x - t) + 1.0); }, -12.0, 12.0, kPanels) /
        kPi;
    track("voigt", std::abs(gsft::voigt(x, 1.0) - voigt_ref));
  };
  for (int i = 0; i < 21; ++i) check_at(-3.0 + 0.3 * i);
  for (int i = 0; i < 21; ++i) check_at(0.15 * i);
  return {worst <= 1e-9,
          fmt::format("erf, dawson, voigt, fresnel, normal_cdf on 21 points of [-3,3] and [0,3]: "
                      "max err={:.2e} ({})",
                      worst, worst_name)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "error envelope at N = 50", criterion_fig6},
      {2, "error envelope at N = 300", criterion_fig7},
      {3, "Faddeeva accuracy against quadrature", criterion_faddeeva},
      {4, "weighted and harmonic formulations agree", criterion_equivalence},
      {5, "truncation bound", criterion_truncation},
      {6, "parity structure", criterion_parity},
      {7, "harmonic transform against quadrature oracle", criterion_oracle},
      {8, "window oscillation decreases with c", criterion_window},
      {9, "special-function consistency", criterion_special_functions},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long id = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || id < 1 || id > static_cast<long>(criteria.size())) {
      fmt::print(stderr, "usage: {} [criterion id 1..{}]...\n", argv[0], criteria.size());
      return 2;
    }
    selected.insert(static_cast<int>(id));
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, fmt::format("exception: {}", e.what())};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fmt::print("[{}] criterion {}: {} | {} | {:.2f}s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail,
               seconds);
    for (const auto& note : v.notes) fmt::print("       {}\n", note);
    if (!v.pass) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
