#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <utility>

#include "ahgm/errors.hpp"

namespace ahgm {

// Adaptive composite Gauss-Legendre quadrature.
//
// A fixed 16-point rule (exact through degree 31) is applied on a uniform
// panel subdivision of [a,b]; the panel count doubles until two successive
// refinements agree to tolerance.  Evaluation order is fixed left-to-right,
// so results are bit-reproducible across runs.

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_doublings = 15;  // up to 2^15 panels of 16 nodes
};

namespace detail {

// Degree-16 Gauss-Legendre abscissae (positive half) and weights on [-1,1].
inline constexpr double kGlNode[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline constexpr double kGlWeight[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <class F>
double gl16_panels(F&& f, double a, double b, long panels) {
  const double h = (b - a) / static_cast<double>(panels);
  double sum = 0.0;
  for (long p = 0; p < panels; ++p) {
    const double c = a + (static_cast<double>(p) + 0.5) * h;
    const double s = 0.5 * h;
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
      acc += kGlWeight[i] * (f(c - s * kGlNode[i]) + f(c + s * kGlNode[i]));
    }
    sum += s * acc;
  }
  return sum;
}

}  // namespace detail

template <class F>
double integrate(F&& f, double a, double b, QuadratureOptions opts = {}) {
  if (a == b) return 0.0;
  if (!(a < b)) throw domain_error("integrate: expected a < b");
  long panels = 1;
  double prev = detail::gl16_panels(f, a, b, panels);
  double last_diff = 0.0;
  for (int k = 0; k < opts.max_doublings; ++k) {
    panels *= 2;
    const double cur = detail::gl16_panels(f, a, b, panels);
    last_diff = std::fabs(cur - prev);
    if (last_diff <= opts.abs_tol ||
        last_diff <= opts.rel_tol * std::fabs(cur)) {
      return cur;
    }
    prev = cur;
  }
  char msg[160];
  std::snprintf(msg, sizeof msg,
                "integrate: no convergence on [%g,%g] after %ld panels "
                "(last residual %.3e)",
                a, b, panels, last_diff);
  throw numerical_error(msg);
}

// Type-erased overload for call sites that keep integrands as std::function.
double integrate_fn(const std::function<double(double)>& f, double a, double b,
                    QuadratureOptions opts = {});

}  // namespace ahgm
