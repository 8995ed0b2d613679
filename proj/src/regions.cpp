#include "ahgm/regions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ahgm/errors.hpp"
#include "ahgm/hyperbolic.hpp"
#include "ahgm/levels.hpp"
#include "ahgm/quadrature.hpp"
#include "ahgm/roots.hpp"

namespace ahgm {

namespace {

// sinh(r + a) - sinh(r) without cancellation.
double sinh_gap(double r, double a) {
  return 2.0 * std::cosh(r + 0.5 * a) * std::sinh(0.5 * a);
}

// Radial volume element in the u parameter (rho = rho_plus + u^2):
//     rho^{n-1} sqrt(A) drho = 2 rho^{n-1} sqrt(u^2/F0 + F0 u^2 df^2) du.
double volume_element_u(const RadialProfile& p, double u) {
  const double rho = p.rho_plus() + u * u;
  const double f0 = 1.0 + rho * rho;
  return 2.0 * std::pow(rho, p.n() - 1) *
         std::sqrt(u * u / f0 + f0 * p.u2_df2(u));
}

void require_past_boundary(double rho_r, double r_plus, const char* who) {
  if (!(rho_r > 0.0) || !(rho_r >= r_plus * (1.0 + 1e-9))) {
    throw domain_error(std::string(who) +
                       ": outer radius must clear the boundary sphere");
  }
}

}  // namespace

double omega_volume(const GraphManifold& G, double rho_r) {
  const RadialProfile& p = G.profile;
  const double r_plus = std::asinh(p.rho_plus());
  require_past_boundary(rho_r, r_plus, "omega_volume");
  if (p.entire() && p.kind() == ProfileKind::closed_form) {
    return ball_volume(p.n(), rho_r);  // flat profile: a hyperbolic ball
  }
  const double u_end = std::sqrt(sinh_gap(r_plus, rho_r - r_plus));
  return omega(p.n()) *
         integrate([&p](double u) { return volume_element_u(p, u); }, 0.0,
                   u_end, profile_quadrature(p));
}

VolumeSplit omega_volume_split(const GraphManifold& G, double rho_r,
                               double h0) {
  const RadialProfile& p = G.profile;
  const double r_plus = std::asinh(p.rho_plus());
  require_past_boundary(rho_r, r_plus, "omega_volume_split");
  const double u_end = std::sqrt(sinh_gap(r_plus, rho_r - r_plus));
  double u_split = 0.0;
  if (h0 >= p.sup_f()) {
    u_split = u_end;
  } else if (h0 > 0.0) {
    u_split = std::min(std::sqrt(level_offset(G, h0)), u_end);
  }
  auto elem = [&p](double u) { return volume_element_u(p, u); };
  const QuadratureOptions opts = profile_quadrature(p);
  VolumeSplit out;
  out.below = omega(p.n()) * integrate(elem, 0.0, u_split, opts);
  out.above = omega(p.n()) * integrate(elem, u_split, u_end, opts);
  out.total = out.below + out.above;
  return out;
}

CoareaUpper coarea_volume_upper(const GraphManifold& G, double rho_r,
                                double h0) {
  const RadialProfile& p = G.profile;
  const int n = p.n();
  const double r_plus = std::asinh(p.rho_plus());
  require_past_boundary(rho_r, r_plus, "coarea_volume_upper");
  const double rho_out = std::sinh(rho_r);
  const double f_out = p.f(rho_out);
  const double h_mid = std::clamp(h0, 0.0, f_out);

  CoareaUpper out;
  out.annulus_ball = ball_volume(n, rho_r) - ball_volume(n, r_plus);
  // Coarea over heights: the slope integral below h_mid is bounded by its
  // outermost level area (levels grow outward), likewise above.
  const double rho_mid =
      h_mid > 0.0 ? std::min(p.rho_plus() + level_offset(G, h_mid), rho_out)
                  : p.rho_plus();
  out.below = omega(n) * std::sqrt(1.0 + rho_mid * rho_mid) *
              std::pow(rho_mid, n - 1) * h_mid;
  out.above = omega(n) * std::sqrt(1.0 + rho_out * rho_out) *
              std::pow(rho_out, n - 1) * std::max(f_out - h_mid, 0.0);
  out.upper = out.annulus_ball + out.below + out.above;
  return out;
}

VolumeBounds volume_bounds(const GraphManifold& G, double mass, double beta,
                           double rho_r, double D0) {
  const RadialProfile& p = G.profile;
  const int n = p.n();
  if (!(mass >= 0.0)) throw domain_error("volume_bounds: mass must be >= 0");
  if (mass >= 1.0) {
    throw out_of_hypothesis("volume_bounds: estimate stated for mass < 1");
  }
  if (!(beta > 1.0)) throw domain_error("volume_bounds: beta must exceed 1");
  if (!(D0 >= 0.0)) throw domain_error("volume_bounds: D0 must be >= 0");
  const double r_plus = std::asinh(p.rho_plus());
  require_past_boundary(rho_r, r_plus, "volume_bounds");

  const double ball = ball_volume(n, rho_r);
  VolumeBounds out;
  out.lower = ball - ball_volume(n, r_plus);
  out.upper = ball +
              std::pow(mass, 1.0 / static_cast<double>(n - 2)) *
                  std::cosh(rho_r) * sphere_area(n, rho_r) +
              2.0 * beta * omega(n) * mass *
                  (1.0 / static_cast<double>(n - 1) + std::cosh(rho_r) * D0);
  return out;
}

double diameter_bound(double rho0, double gamma, double depth_D, double rho) {
  if (!(rho0 > 0.0) || !(rho >= rho0)) {
    throw domain_error("diameter_bound: need rho >= rho0 > 0");
  }
  if (!(gamma >= 0.0) || !(depth_D >= 0.0)) {
    throw domain_error("diameter_bound: gamma and depth must be >= 0");
  }
  const double lip = std::sqrt(1.0 + gamma * gamma);
  return 2.0 * depth_D + 2.0 * (rho - rho0) * lip +
         kPi * std::sinh(rho0) * lip;
}

double diameter_bound(const GraphManifold& G, double rho) {
  return diameter_bound(G.rho0, G.gamma, G.depth_D, rho);
}

double annulus_lipschitz(double rho0, double rho, double gamma) {
  if (!(rho0 > 0.0) || !(rho > 0.5 * rho0)) {
    throw domain_error("annulus_lipschitz: need rho > rho0/2 > 0");
  }
  if (!(gamma >= 0.0)) {
    throw domain_error("annulus_lipschitz: gamma must be >= 0");
  }
  const double stretch = kPi * std::sinh(rho) / (rho - 0.5 * rho0);
  return std::max(1.0, stretch) * std::sqrt(1.0 + gamma * gamma);
}

AreaComparison boundary_area_bound(const GraphManifold& G, double mass,
                                   double rho_r) {
  const RadialProfile& p = G.profile;
  if (!(mass >= 0.0)) {
    throw domain_error("boundary_area_bound: mass must be >= 0");
  }
  const double r_plus = std::asinh(p.rho_plus());
  require_past_boundary(rho_r, r_plus, "boundary_area_bound");
  const int n = p.n();

  AreaComparison out;
  out.measured =
      omega(n) * std::pow(p.rho_plus(), n - 1) + sphere_area(n, rho_r);
  out.bound = 2.0 * omega(n) * mass +
              std::sqrt(1.0 + G.gamma * G.gamma) * sphere_area(n, rho_r);
  out.slack = out.bound - out.measured;
  return out;
}

// ---------------------------------------------------------------------------
// Flat-distance filling
// ---------------------------------------------------------------------------

namespace {

// Height of the ambient sphere of area radius rho_bar over the slice point
// with area radius rho:  s_max = sqrt(rho_bar^2 - rho^2) / sqrt(1 + rho^2).
double ball_height(double rho_bar, double rho) {
  const double gap2 = (rho_bar - rho) * (rho_bar + rho);
  return std::sqrt(std::max(gap2, 0.0) / (1.0 + rho * rho));
}

// Area of the ambient-sphere band between heights s_lo <= s_hi (both taken
// at nonnegative |s|; the profile rho(s)^2 = (rho_bar^2 - s^2)/(1 + s^2) is
// even in s).
double sphere_band_area(int n, double rho_bar, double s_lo, double s_hi) {
  auto elem = [n, rho_bar](double s) {
    const double q = 1.0 + s * s;
    const double rho2 = (rho_bar - s) * (rho_bar + s) / q;
    const double rho = std::sqrt(rho2);
    const double slope = -s * (1.0 + rho_bar * rho_bar) / (rho * q * q);
    return std::pow(rho, n - 1) *
           std::sqrt(slope * slope / (1.0 + rho2) + 1.0 + rho2);
  };
  return omega(n) * integrate(elem, s_lo, s_hi);
}

}  // namespace

FlatDistanceParts flat_distance_parts(const GraphManifold& G, double h0,
                                      double rho_bar) {
  const RadialProfile& p = G.profile;
  const int n = p.n();
  if (!(h0 >= 0.0 && h0 <= p.sup_f())) {
    throw domain_error("flat_distance_parts: h0 must lie in [0, sup f]");
  }
  const double rp = p.rho_plus();
  if (!(rho_bar > rp)) {
    throw domain_error(
        "flat_distance_parts: ambient ball must contain the boundary sphere");
  }

  FlatDistanceParts out;
  if (p.sup_f() == 0.0) return out;  // the graph *is* the slice
  out.normalized = h0 > 0.0;

  const double f_rim = p.f(rho_bar) - h0;
  if (f_rim < 0.0) {
    throw domain_error(
        "flat_distance_parts: shifted graph stays below the slice at the "
        "ball rim; enlarge rho_bar");
  }

  const double u_h0 = h0 > 0.0 ? std::sqrt(level_offset(G, h0)) : 0.0;
  const double rho_h0 = rp + u_h0 * u_h0;

  // Upper exit: shifted height meets the ball sphere.  f - h0 increases and
  // the sphere height decreases, so the crossing is unique.
  double rho_x = rho_bar;
  if (f_rim > 0.0) {
    rho_x = bisect(
        [&](double rho) { return p.f(rho) - h0 - ball_height(rho_bar, rho); },
        rho_h0, rho_bar, 0.0, 120);
  }
  out.rho_x = rho_x;
  const double s_x = ball_height(rho_bar, rho_x);

  // Lower exit: active only when the boundary cylinder pokes out of the ball.
  const double s_boundary = ball_height(rho_bar, rp);
  const bool has_lower_band = h0 > s_boundary;
  double u_y = 0.0;
  if (has_lower_band) {
    u_y = bisect(
        [&](double u) {
          return h0 - p.f_at_offset(u * u) - ball_height(rho_bar, rp + u * u);
        },
        0.0, u_h0, 0.0, 120);
  }
  const double rho_y = rp + u_y * u_y;

  // Volume between graph and slice: omega Int rho^{n-1} min(|f - h0|, s_max),
  // assembled piecewise at the clip radii; the piece touching the boundary
  // runs in the u parameter, the piece touching the rim in v = sqrt of the
  // gap to rho_bar, so every integrand is smooth.
  const double clipped_below =
      has_lower_band
          ? integrate(
                [&](double rho) {
                  return std::pow(rho, n - 1) * ball_height(rho_bar, rho);
                },
                rp, rho_y)
          : 0.0;
  const QuadratureOptions prof_opts = profile_quadrature(p);
  const double below = integrate(
      [&](double u) {
        const double rho = rp + u * u;
        return 2.0 * u * std::pow(rho, n - 1) * (h0 - p.f_at_offset(u * u));
      },
      u_y, u_h0, prof_opts);
  const double above = integrate(
      [&](double u) {
        const double rho = rp + u * u;
        return 2.0 * u * std::pow(rho, n - 1) * (p.f_at_offset(u * u) - h0);
      },
      u_h0, std::sqrt(rho_x - rp), prof_opts);
  const double clipped_above = integrate(
      [&](double v) {
        const double rho = rho_bar - v * v;
        return 2.0 * v * v * std::pow(rho, n - 1) *
               std::sqrt((rho_bar + rho) / (1.0 + rho * rho));
      },
      0.0, std::sqrt(rho_bar - rho_x));
  out.slab = omega(n) * (clipped_below + below + above + clipped_above);

  out.disk = ball_volume(n, std::asinh(rp));
  out.wall = omega(n) * std::pow(rp, n - 1) * std::sqrt(1.0 + rp * rp) *
             std::min(h0, s_boundary);
  out.band = sphere_band_area(n, rho_bar, 0.0, s_x);
  if (has_lower_band) {
    out.band_lower =
        sphere_band_area(n, rho_bar, ball_height(rho_bar, rho_y), s_boundary);
  }
  out.total =
      out.slab + out.disk + out.wall + out.band + out.band_lower;
  return out;
}

double flat_distance_bound(const GraphManifold& G, double h0, double rho_bar) {
  return flat_distance_parts(G, h0, rho_bar).total;
}

}  // namespace ahgm
