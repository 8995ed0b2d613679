#pragma once

#include "ahgm/graph_model.hpp"

namespace ahgm {

struct HeightReport {
  double beta = 0.0;
  double mass = 0.0;
  double threshold = 0.0;  // max{2 beta omega m^{(n-1)/(n-2)}, 2 beta omega m}
  double rho_h = 0.0;      // area radius of the threshold sphere
  double h0 = 0.0;
  double sup_f = 0.0;
  double gap = 0.0;        // sup_f - h0
  double gap_ratio = 0.0;  // gap / mass^{1/(n-2)}; NaN at mass = 0
};

// Boundary offset delta with f(rho_plus + delta) = h, by monotone bisection
// in u = sqrt(delta); exact at the boundary where the slope diverges.
// Requires 0 < h < sup f.
double level_offset(const GraphManifold& G, double h);

// Area radius of the level set {f = h}.
double level_radius(const GraphManifold& G, double h);

// H^{n-1}(f^{-1}(h)) for the radial monotone profile: omega rho(h)^{n-1}
// inside (0, sup f), the boundary-sphere area at h = 0, and 0 outside
// [0, sup f).
double level_set_area(const GraphManifold& G, double h);

// Perimeter of the sublevel set of the constant extension: the boundary
// sphere area for h <= 0, level_set_area inside (0, sup f), +infinity for
// h >= sup f (unbounded sublevel set).
double perimeter_function(const GraphManifold& G, double h);

// Height h0: the largest level below which every level set stays under the
// mass-scaled area threshold.  Radial monotone profiles make the defining
// set a half-line, so h0 = f(rho_h) with rho_h the threshold sphere radius
// (clamped to 0 when the threshold sphere sits inside the boundary, and to
// sup f in the degenerate mass = 0 case).
HeightReport height_h0(const GraphManifold& G, double mass, double beta);

struct PenroseResult {
  bool applicable = false;  // false for entire profiles (no boundary)
  double boundary_area = 0.0;
  double margin = 0.0;       // 2 omega m / cosh(r0) - vol(boundary)
  double weak_margin = 0.0;  // 2 omega m      - vol(boundary)
};

PenroseResult penrose_check(const GraphManifold& G, double mass);

// sphere_area(n, r)/(n-1) - ball_volume(n, r); nonnegative in H^n.
double isoperimetric_check(int n, double r);

}  // namespace ahgm
