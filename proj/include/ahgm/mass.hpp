#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ahgm/graph_model.hpp"

namespace ahgm {

struct MassReport {
  std::vector<std::pair<double, double>> samples;  // (r, integrand value)
  double mass = 0.0;       // extrapolated limit
  bool convergence_ok = false;
  double tail_slope = 0.0; // fitted decay exponent of |sample - mass|
  std::string note;
};

// Sphere-integrated mass charge at geodesic radius r: the radial reduction
// of the four-term flux 1-form
//     V (div e - d tr e) + (tr e) dV - e(grad V, .)
// for e = V^2 df (x) df, integrated over S_r against the unit normal and
// normalized by 2 (n-1) omega(n).  Approaches the total mass as r grows.
double mass_integrand(const GraphManifold& G, double r);

// Evaluates the charge along an increasing schedule (>= 4 radii, all outside
// the boundary) and removes the exponential tail by fitting a + b e^{-c r}
// to the last three samples.  A non-geometric tail falls back to the last
// sample with convergence_ok = false and an explanatory note.
MassReport mass_estimate(const GraphManifold& G,
                         const std::vector<double>& schedule);

inline std::vector<double> default_mass_schedule() {
  return {5.0, 8.0, 11.0, 14.0, 17.0, 20.0};
}

}  // namespace ahgm
