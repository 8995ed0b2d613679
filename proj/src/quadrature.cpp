#include "ahgm/quadrature.hpp"

namespace ahgm {

double integrate_fn(const std::function<double(double)>& f, double a, double b,
                    QuadratureOptions opts) {
  return integrate([&f](double x) { return f(x); }, a, b, opts);
}

}  // namespace ahgm
