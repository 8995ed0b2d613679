#pragma once

#include "ahgm/graph_model.hpp"

namespace ahgm {

// Induced volume of the truncated exterior region Omega(rho_r): the graph
// over the annulus between the boundary sphere and geodesic radius rho_r.
// Radial metric A(rho) drho^2 + rho^2 sigma with A = 1/F0 + F0 (df)^2, so
//     vol = omega(n) * Int rho^{n-1} sqrt(A) drho,
// evaluated in the u parameter (rho = rho_plus + u^2) where the integrand is
// smooth through the boundary.  An entire model graph is a hyperbolic ball.
double omega_volume(const GraphManifold& G, double rho_r);

struct VolumeSplit {
  double below = 0.0;  // heights f <= h0
  double above = 0.0;
  double total = 0.0;
};

// Same integral split at the level radius rho(h0), each piece integrated
// independently; total = below + above must reproduce omega_volume up to
// quadrature tolerance.
VolumeSplit omega_volume_split(const GraphManifold& G, double rho_r, double h0);

struct CoareaUpper {
  double annulus_ball = 0.0;  // exact: ball(rho_r) - ball(boundary radius)
  double below = 0.0;         // slope contribution under height h0
  double above = 0.0;         // slope contribution above h0
  double upper = 0.0;
};

// Rigorous volume upper bound from sqrt(A) <= 1/sqrt(F0) + sqrt(F0)|df|:
// the first term integrates exactly to a hyperbolic annulus volume, the
// slope term is a coarea integral over heights bounded by its outermost
// level area on each side of h0.
CoareaUpper coarea_volume_upper(const GraphManifold& G, double rho_r,
                                double h0);

struct VolumeBounds {
  double lower = 0.0;
  double upper = 0.0;
  // The mass-scaled term carries an unspecified universal constant; it is
  // evaluated at unit scale here, so upper is an audit of the *shape* of the
  // bound, not of the constant.
  bool unit_scale_constant = true;
};

// Two-sided volume estimate for Omega(rho_r) in the small-mass regime
// (mass < 1 required):
//   lower = ball(rho_r) - ball(boundary),
//   upper = ball(rho_r) + m^{1/(n-2)} cosh(rho_r) area(rho_r)
//           + 2 beta omega(n) m (1/(n-1) + cosh(rho_r) D0),
// D0 a diameter bound for the region (see diameter_bound).
VolumeBounds volume_bounds(const GraphManifold& G, double mass, double beta,
                           double rho_r, double D0);

// Intrinsic diameter bound for the graph over the annulus rho0 <= r <= rho:
// twice the collar depth, plus two Lipschitz radial runs, plus a great
// circle of the inner sphere stretched by the slope bound.
double diameter_bound(double rho0, double gamma, double depth_D, double rho);
double diameter_bound(const GraphManifold& G, double rho);

// Lipschitz constant of the radial projection of the annulus rho0/2 < r < rho
// onto the graph, gamma the slope bound on the collar.
double annulus_lipschitz(double rho0, double rho, double gamma);

struct AreaComparison {
  double measured = 0.0;  // inner + outer sphere areas of the region
  double bound = 0.0;     // 2 omega m + sqrt(1+gamma^2) * outer base area
  double slack = 0.0;     // bound - measured
};

AreaComparison boundary_area_bound(const GraphManifold& G, double mass,
                                   double rho_r);

// ---------------------------------------------------------------------------
// Ambient flat-distance bound
// ---------------------------------------------------------------------------
//
// The graph, renormalized to height f - h0 and clipped to the ambient ball
// of area radius rho_bar, is compared with the totally geodesic slice
// {s = 0}.  The filling region between them and the closing surfaces give
//     d_flat <= slab + disk + wall + band (+ lower band),
// every piece an explicit integral in the exact ambient volume element
// rho^{n-1} drho dsigma ds.

struct FlatDistanceParts {
  double rho_x = 0.0;  // area radius where the shifted graph exits the ball
  double slab = 0.0;   // region between graph and slice inside the ball
  double disk = 0.0;   // slice disk closing the inner boundary sphere
  double wall = 0.0;   // boundary cylinder between heights -h0 and 0
  double band = 0.0;   // ambient-sphere band above the slice rim
  double band_lower = 0.0;  // only when the wall exits the ball below
  double total = 0.0;
  bool normalized = false;  // true when a nonzero h0 shift was applied
};

FlatDistanceParts flat_distance_parts(const GraphManifold& G, double h0,
                                      double rho_bar);
double flat_distance_bound(const GraphManifold& G, double h0, double rho_bar);

}  // namespace ahgm
