#pragma once

namespace ahgm {

// Closed-form geometry of hyperbolic space H^n, radial (geodesic polar)
// coordinates.  `r` is geodesic distance from the center; the area radius is
// rho = sinh(r) throughout the library.

inline constexpr double kPi = 3.14159265358979323846;

// Area of the unit (n-1)-sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
double omega(int n);

// Area of the geodesic sphere of radius r in H^n: omega(n) sinh^{n-1}(r).
double sphere_area(int n, double r);

// Volume of the geodesic ball of radius r in H^n, by quadrature of the
// sphere-area element.  (For n = 3 this must match pi (sinh 2r - 2r).)
double ball_volume(int n, double r);

// Static lapse of the ambient warped product: V(r) = cosh(r).
double lapse(double r);

}  // namespace ahgm
