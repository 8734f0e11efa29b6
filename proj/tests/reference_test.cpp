#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "gsft/errors.hpp"
#include "gsft/reference.hpp"
#include "gsft/transform.hpp"
#include "oracles.hpp"

using gsft::TransformConfig;
using gsft::WaveletPart;
using gsft::testing::component_error;

TEST_SUITE("reference") {

TEST_CASE("example wavelet values") {
  CHECK(gsft::example_f(0.0) == 1.0);
  CHECK(gsft::example_even(0.0) == 1.0);
  CHECK(gsft::example_odd(0.0) == 0.0);
  CHECK(gsft::example_f(0.3) == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(gsft::example_f(0.7) == 0.0);
  CHECK(gsft::example_f(-0.7) == 0.0);

  // Closed interval at the endpoints.
  CHECK(gsft::example_even(0.5) == 1.0);
  CHECK(gsft::example_even(-0.5) == 1.0);
  CHECK(gsft::example_odd(0.5) == 1.0);
  CHECK(gsft::example_odd(-0.5) == -1.0);
  CHECK(gsft::example_f(0.5) == 2.0);
  CHECK(gsft::example_f(-0.5) == 0.0);
  CHECK(gsft::example_even(std::nextafter(0.5, 1.0)) == 0.0);

  CHECK(gsft::example_wavelet(WaveletPart::full, 0.25) == gsft::example_f(0.25));
  CHECK(gsft::example_wavelet(WaveletPart::odd_part, 0.25) == gsft::example_odd(0.25));
}

TEST_CASE("property: split and parity") {
  auto rng = gsft::testing::make_rng(29);
  for (int i = 0; i < 500; ++i) {
    const double t = gsft::testing::uniform(rng, -1.0, 1.0);
    CHECK(gsft::example_f(t) == doctest::Approx(gsft::example_even(t) + gsft::example_odd(t)).epsilon(1e-15));
    CHECK(gsft::example_even(-t) == gsft::example_even(t));
    CHECK(gsft::example_odd(-t) == -gsft::example_odd(t));
  }
}

TEST_CASE("analytic transforms") {
  CHECK(gsft::analytic_G(0.0) == 1.0);
  CHECK(std::abs(gsft::analytic_G(1.0)) <= 1e-16);
  CHECK(gsft::analytic_G(0.5) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-15));
  CHECK(gsft::analytic_G(-0.5) == gsft::analytic_G(0.5));

  CHECK(gsft::analytic_H(0.0) == gsft::Complex{});
  CHECK(component_error(gsft::analytic_H(1.0), {0.0, -1.0 / std::numbers::pi}) <= 1e-16);
  // Continuity across the small-argument series switch.
  const double x = 1e-3 / std::numbers::pi;
  CHECK(gsft::analytic_H(std::nextafter(x, 0.0)).imag() ==
        doctest::Approx(gsft::analytic_H(std::nextafter(x, 1.0)).imag()).epsilon(1e-9));
  CHECK(gsft::analytic_H(-0.3) == -gsft::analytic_H(0.3));
}

TEST_CASE("quadrature transform oracle") {
  for (double nu : {-7.3, -1.0, 0.0, 0.25, 2.0, 9.9}) {
    CAPTURE(nu);
    const auto even = gsft::quadrature_ft_oracle(gsft::example_even, {-0.5, 0.5}, nu, 1e-12);
    const auto odd = gsft::quadrature_ft_oracle(gsft::example_odd, {-0.5, 0.5}, nu, 1e-12);
    CHECK(component_error(even, {gsft::analytic_G(nu), 0.0}) <= 1e-11);
    CHECK(component_error(odd, gsft::analytic_H(nu)) <= 1e-11);
  }
  const auto gaussian = [](double t) { return std::exp(-std::numbers::pi * t * t); };
  for (double nu : {0.0, 0.5, 1.3, 2.5}) {
    const auto v = gsft::quadrature_ft_oracle(gaussian, {-8.0, 8.0}, nu, 1e-10);
    CHECK(component_error(v, {std::exp(-std::numbers::pi * nu * nu), 0.0}) <= 1e-8);
  }
  CHECK_THROWS_AS(gsft::quadrature_ft_oracle(gaussian, {1.0, 1.0}, 0.0, 1e-8), gsft::InvalidArgument);
  CHECK_THROWS_AS(gsft::quadrature_ft_oracle(gaussian, {-1.0, 1.0}, 0.0, 1e-3), gsft::InvalidArgument);
}

TEST_CASE("transform additivity on the example") {
  const auto cfg = TransformConfig::from_effective_length(1.0, 50);
  const auto full = gsft::sample_example(WaveletPart::full, cfg);
  const auto even = gsft::sample_example(WaveletPart::even_part, cfg);
  const auto odd = gsft::sample_example(WaveletPart::odd_part, cfg);
  for (double nu = -10.0; nu <= 10.0; nu += 0.25) {
    const gsft::Complex split = gsft::forward_even(even, cfg, nu) + gsft::forward_odd(odd, cfg, nu);
    CHECK(component_error(gsft::forward_harmonic(full, cfg, nu), split) <= 1e-12);
  }
}

TEST_CASE("error envelope") {
  const auto grid = gsft::EvaluationGrid::uniform(-10.0, 10.0, 2001);
  const auto fig6 = gsft::delta_envelope(TransformConfig::with_effective_length(0.0099, 0.0099, 50, 1.0), grid);
  const auto fig7 =
      gsft::delta_envelope(TransformConfig::with_effective_length(0.00166389, 0.00166389, 300, 1.0), grid, 4);

  SUBCASE("near nu = 0 the window transform is close to one") {
    CHECK(std::abs(fig6.delta_re[1000]) <= 1e-3);
    CHECK(std::abs(fig6.delta_im[1000]) <= 1e-15);
  }
  SUBCASE("frozen sup-norms over [-10, 10]") {
    CHECK(fig6.max_abs_re == doctest::Approx(2.35e-3).epsilon(0.01));
    CHECK(fig6.max_abs_im == doctest::Approx(2.47e-3).epsilon(0.01));
    CHECK(fig7.max_abs_re == doctest::Approx(6.88e-5).epsilon(0.01));
    CHECK(fig7.max_abs_im == doctest::Approx(7.25e-5).epsilon(0.01));
  }
  SUBCASE("increasing N shrinks the envelope tenfold") {
    CHECK(fig7.max_abs_re * 10.0 <= fig6.max_abs_re);
    CHECK(fig7.max_abs_im * 10.0 <= fig6.max_abs_im);
  }
  SUBCASE("central band stays inside the tight bound") {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (std::abs(grid[k]) > 3.0) continue;
      re = std::max(re, std::abs(fig7.delta_re[k]));
      im = std::max(im, std::abs(fig7.delta_im[k]));
    }
    CHECK(re <= 3e-5);
    CHECK(im <= 3e-5);
  }
  SUBCASE("thread count does not change the result") {
    const auto serial = gsft::delta_envelope(TransformConfig::with_effective_length(0.00166389, 0.00166389, 300, 1.0), grid);
    CHECK(serial.delta_re == fig7.delta_re);
    CHECK(serial.delta_im == fig7.delta_im);
    CHECK(serial.max_abs_re == fig7.max_abs_re);
  }
  SUBCASE("configuration must cover the unit support") {
    CHECK_THROWS_AS(gsft::delta_envelope(TransformConfig(0.01, 0.01, 50), grid), gsft::InvalidArgument);
  }
  SUBCASE("CSV export") {
    std::ostringstream out;
    gsft::write_envelope_csv(out, fig6);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "nu,delta_re,delta_im");
    std::getline(in, line);
    CHECK(line.rfind("-10,", 0) == 0);
    std::size_t rows = 1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2001);
  }
}

}  // TEST_SUITE
