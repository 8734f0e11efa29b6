#include "gsft/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gsft/errors.hpp"

namespace gsft::quadrature {
namespace {

using Complex = std::complex<double>;

// Kronrod-15 abscissae in ascending order starting at 0. The 7-point Gauss
// nodes sit at the even positions of that list.
struct Rule {
  std::array<double, 8> nodes{};
  std::array<double, 8> kronrod{};
  std::array<double, 4> gauss_weights{};

  Rule() {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto& ka = gauss_kronrod<double, 15>::abscissa();
    const auto& kw = gauss_kronrod<double, 15>::weights();
    const auto& gw = gauss<double, 7>::weights();
    std::copy(ka.begin(), ka.end(), nodes.begin());
    std::copy(kw.begin(), kw.end(), kronrod.begin());
    std::copy(gw.begin(), gw.end(), gauss_weights.begin());
  }
};

const Rule& rule() {
  static const Rule r;
  return r;
}

struct Segment {
  double a;
  double b;
  Complex value;
  double error;
};

Segment apply_rule(const Integrand& f, double a, double b) {
  const Rule& r = rule();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const Complex fc = f(center);
  Complex kronrod = fc * r.kronrod[0];
  Complex gauss = fc * r.gauss_weights[0];
  for (std::size_t i = 1; i < r.nodes.size(); ++i) {
    const double dx = half * r.nodes[i];
    const Complex pair = f(center - dx) + f(center + dx);
    kronrod += pair * r.kronrod[i];
    if (i % 2 == 0) gauss += pair * r.gauss_weights[i / 2];
  }
  const Complex value = kronrod * half;
  const double error = std::abs(kronrod - gauss) * std::abs(half);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw ConvergenceError("integrand is not finite on [" + std::to_string(a) +
                               ", " + std::to_string(b) + "]",
                           std::numeric_limits<double>::infinity());
  }
  return {a, b, value, error};
}

bool by_error(const Segment& lhs, const Segment& rhs) {
  return lhs.error < rhs.error;
}

double total_error(const std::vector<Segment>& heap) {
  double sum = 0.0;
  for (const auto& s : heap) sum += s.error;
  return sum;
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, double abs_tol,
                 std::size_t max_subdivisions) {
  if (!(abs_tol > 0.0)) throw InvalidArgument("quadrature tolerance must be > 0");
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("quadrature limits must be finite");
  }
  if (a == b) return {};

  std::vector<Segment> heap{apply_rule(f, a, b)};
  std::size_t subdivisions = 0;
  double error = heap.front().error;

  while (error > abs_tol) {
    if (subdivisions >= max_subdivisions) {
      throw ConvergenceError(
          "adaptive quadrature exceeded " + std::to_string(max_subdivisions) +
              " subdivisions (error estimate " + std::to_string(error) + ")",
          error);
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Segment worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
    if (std::abs(worst.b - worst.a) <=
        64.0 * std::numeric_limits<double>::epsilon() * scale) {
      throw ConvergenceError("adaptive quadrature interval collapsed near " +
                                 std::to_string(mid),
                             error);
    }
    heap.push_back(apply_rule(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(apply_rule(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), by_error);
    ++subdivisions;
    error = total_error(heap);
  }

  // Sum in interval order so the result does not depend on heap layout.
  std::sort(heap.begin(), heap.end(),
            [](const Segment& l, const Segment& r) { return l.a < r.a; });
  Complex value{};
  for (const auto& s : heap) value += s.value;
  return {value, error, subdivisions};
}

}  // namespace gsft::quadrature
