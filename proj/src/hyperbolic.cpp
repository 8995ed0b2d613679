#include "ahgm/hyperbolic.hpp"

#include <cmath>

#include "ahgm/errors.hpp"
#include "ahgm/quadrature.hpp"

namespace ahgm {

namespace {

void require_dimension(int n, const char* who) {
  if (n < 2) throw domain_error(std::string(who) + ": dimension must be >= 2");
}

void require_radius(double r, const char* who) {
  if (!(r >= 0.0)) throw domain_error(std::string(who) + ": radius must be >= 0");
}
}  // namespace

double omega(int n) {
  require_dimension(n, "omega");
  return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

double sphere_area(int n, double r) {
  require_dimension(n, "sphere_area");
  require_radius(r, "sphere_area");
  return omega(n) * std::pow(std::sinh(r), n - 1);
}

double ball_volume(int n, double r) {
  require_dimension(n, "ball_volume");
  require_radius(r, "ball_volume");
  if (r == 0.0) return 0.0;
  const double area = omega(n);
  return area * integrate(
                    [n](double t) { return std::pow(std::sinh(t), n - 1); },
                    0.0, r);
}

double lapse(double r) { return std::cosh(r); }

}  // namespace ahgm
