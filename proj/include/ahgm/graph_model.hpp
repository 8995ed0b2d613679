#pragma once

#include "ahgm/profile.hpp"
#include "ahgm/quadrature.hpp"

namespace ahgm {

// A rotationally symmetric graphical manifold over H^n \ U together with its
// class constants: rho0 (admissibility radius, geodesic), gamma (slope decay
// bound on {r >= rho0/2}), and depth_D (graph length from the boundary
// sphere to Sigma(rho0)).
struct GraphManifold {
  RadialProfile profile;
  double rho0 = 1.0;
  double gamma = 0.0;
  double depth_D = 0.0;
};

// The exact one-parameter model family; class constants take their defaults
// rho0 = 2.2 arcsinh(rho_plus), gamma = 1.1 sqrt(gradient_decay at rho0/2),
// depth_D measured along the radial graph curve (m = 0 falls back to
// rho0 = 1, gamma = 0).
GraphManifold ads_schwarzschild(int n, double m);

// Wrap an arbitrary profile with explicit class constants; depth_D is
// measured from the profile.
GraphManifold make_graph(RadialProfile profile, double rho0, double gamma);

// V(r)^2 |grad_b f|^2 = (1+rho^2)^2 (df/drho)^2 at area radius rho.
double gradient_decay(const GraphManifold& G, double rho);

// Length of the radial graph curve from the boundary sphere to Sigma(rho0),
// rho0 geodesic; equals rho0 for the entire flat slice.
double graph_depth(const RadialProfile& p, double rho0);

// Quadrature options suited to integrands that sample the profile.  A
// tabulated profile is a C^1 interpolant with curvature jumps at its nodes,
// so panel doubling stalls below ~1e-9; its own interpolation error dwarfs
// that anyway.  Closed-form profiles keep the tight defaults.
QuadratureOptions profile_quadrature(const RadialProfile& p);

// Scalar curvature of the induced metric g = A(rho) drho^2 + rho^2 sigma,
// A = 1/(1+rho^2) + (1+rho^2) (df/drho)^2.  A' is analytic for closed-form
// profiles and a centered 5-point stencil for tabulated ones.
double scalar_curvature(const GraphManifold& G, double rho);

struct AdmissibilityReport {
  bool inside_collar = false;   // U sits inside B^b(rho0/2)
  bool slope_bounded = false;   // sup of gradient_decay on {r >= rho0/2} <= gamma^2
  bool boundary_ok = false;     // slope blow-up at the boundary, or entire
  bool monotone_ok = false;     // f non-decreasing
  bool curvature_ok = false;    // R >= -n(n-1) - tol on the sample grid
  double slope_margin = 0.0;    // gamma^2 - max sampled gradient_decay
  double curvature_excess = 0.0;  // min sampled R + n(n-1)
  bool balanced_assumed = true;   // radial profiles: assumption, not verified
  bool all() const {
    return inside_collar && slope_bounded && boundary_ok && monotone_ok &&
           curvature_ok;
  }
};

AdmissibilityReport check_admissibility(const GraphManifold& G,
                                        double curvature_tol = 1e-6);

}  // namespace ahgm
