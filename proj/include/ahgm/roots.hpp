#pragma once

#include <cmath>
#include <cstdio>

#include "ahgm/errors.hpp"

namespace ahgm {

// Bisection for a continuous function with a sign change on [a,b].
// Runs until the bracket width drops below xtol (absolute) or the iteration
// cap is reached; returns the bracket midpoint.  Deterministic.
template <class F>
double bisect(F&& f, double a, double b, double xtol, int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (std::signbit(fa) == std::signbit(fb)) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "bisect: no sign change on [%.17g, %.17g] (f=%.3e, %.3e)", a,
                  b, fa, fb);
    throw numerical_error(msg);
  }
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if (std::signbit(fm) == std::signbit(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace ahgm
