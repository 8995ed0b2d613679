#include "ahgm/levels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ahgm/errors.hpp"
#include "ahgm/hyperbolic.hpp"
#include "ahgm/roots.hpp"

namespace ahgm {

namespace {

// Level machinery assumes an outward-increasing profile.  Closed-form models
// are monotone by construction; tables are only sampled, so scan the bracket
// before trusting a bisection root.
void require_monotone_below(const RadialProfile& p, double u_hi) {
  if (p.kind() != ProfileKind::tabulated) return;
  const double tol = 1e-12 * (1.0 + std::fabs(p.sup_f()));
  double prev = p.f_at_offset(0.0);
  for (int i = 1; i <= 128; ++i) {
    const double u = u_hi * static_cast<double>(i) / 128.0;
    const double cur = p.f_at_offset(u * u);
    if (cur < prev - tol) {
      throw domain_error("level sets of a non-monotone profile are not spheres");
    }
    prev = std::max(prev, cur);
  }
}

}  // namespace

double level_offset(const GraphManifold& G, double h) {
  const RadialProfile& p = G.profile;
  if (!(h > 0.0 && h < p.sup_f())) {
    throw domain_error("level_offset: height must lie in (0, sup f)");
  }
  double delta_hi = 1.0;
  while (p.f_at_offset(delta_hi) < h) {
    delta_hi *= 2.0;
    if (delta_hi > 1e18) {
      throw numerical_error("level_offset: failed to bracket the level");
    }
  }
  const double u_hi = std::sqrt(delta_hi);
  require_monotone_below(p, u_hi);
  const double u = bisect([&p, h](double u) { return p.f_at_offset(u * u) - h; },
                          0.0, u_hi, 0.0, 120);
  return u * u;
}

double level_radius(const GraphManifold& G, double h) {
  if (h == 0.0) return G.profile.rho_plus();
  return G.profile.rho_plus() + level_offset(G, h);
}

double level_set_area(const GraphManifold& G, double h) {
  const RadialProfile& p = G.profile;
  if (h < 0.0 || h >= p.sup_f()) return 0.0;
  return omega(p.n()) * std::pow(level_radius(G, h), p.n() - 1);
}

double perimeter_function(const GraphManifold& G, double h) {
  const RadialProfile& p = G.profile;
  if (h >= p.sup_f()) return std::numeric_limits<double>::infinity();
  if (h <= 0.0) return omega(p.n()) * std::pow(p.rho_plus(), p.n() - 1);
  return level_set_area(G, h);
}

HeightReport height_h0(const GraphManifold& G, double mass, double beta) {
  const RadialProfile& p = G.profile;
  if (!(beta > 1.0)) throw domain_error("height_h0: beta must exceed 1");
  if (!(mass >= 0.0)) throw domain_error("height_h0: mass must be >= 0");
  const int n = p.n();

  HeightReport rep;
  rep.beta = beta;
  rep.mass = mass;
  rep.sup_f = p.sup_f();
  if (mass == 0.0) {
    // No area threshold to cross; the defining set is empty and h0 clamps to
    // the asymptotic height.
    rep.h0 = rep.sup_f;
    rep.gap = 0.0;
    rep.gap_ratio = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }

  const double w = omega(n);
  const double scaled =
      std::pow(mass, static_cast<double>(n - 1) / static_cast<double>(n - 2));
  rep.threshold = 2.0 * beta * w * std::max(scaled, mass);
  rep.rho_h = std::pow(rep.threshold / w, 1.0 / static_cast<double>(n - 1));
  // Monotone radial level sets: area stays below the threshold exactly until
  // the threshold sphere, so h0 is the height there (0 if that sphere sits
  // inside the boundary).
  rep.h0 = rep.rho_h > p.rho_plus() ? p.f(rep.rho_h) : 0.0;
  rep.gap = rep.sup_f - rep.h0;
  rep.gap_ratio =
      rep.gap / std::pow(mass, 1.0 / static_cast<double>(n - 2));
  return rep;
}

PenroseResult penrose_check(const GraphManifold& G, double mass) {
  if (!(mass >= 0.0)) throw domain_error("penrose_check: mass must be >= 0");
  const RadialProfile& p = G.profile;
  const double rp = p.rho_plus();

  PenroseResult res;
  res.applicable = !p.entire();
  res.boundary_area = omega(p.n()) * std::pow(rp, p.n() - 1);
  const double bound = 2.0 * omega(p.n()) * mass;
  res.weak_margin = bound - res.boundary_area;
  // Lapse at the boundary sphere: cosh(asinh(rp)).
  res.margin = bound / std::sqrt(1.0 + rp * rp) - res.boundary_area;
  return res;
}

double isoperimetric_check(int n, double r) {
  return sphere_area(n, r) / static_cast<double>(n - 1) - ball_volume(n, r);
}

}  // namespace ahgm
