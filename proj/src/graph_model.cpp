#include "ahgm/graph_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ahgm/errors.hpp"
#include "ahgm/quadrature.hpp"

namespace ahgm {

namespace {

// sinh(r + a) - sinh(r) without cancellation (a may be tiny).
double sinh_gap(double r, double a) {
  return 2.0 * std::cosh(r + 0.5 * a) * std::sinh(0.5 * a);
}

}  // namespace

double gradient_decay(const GraphManifold& G, double rho) {
  if (!G.profile.entire() && !(rho > G.profile.rho_plus())) {
    throw domain_error("gradient_decay: rho must exceed the boundary radius");
  }
  const double f0 = 1.0 + rho * rho;
  const double slope = G.profile.df(rho);
  return f0 * f0 * slope * slope;
}

QuadratureOptions profile_quadrature(const RadialProfile& p) {
  QuadratureOptions opts;
  if (p.kind() == ProfileKind::tabulated) {
    opts.abs_tol = 1e-9;
    opts.rel_tol = 1e-8;
  }
  return opts;
}

double graph_depth(const RadialProfile& p, double rho0) {
  const double r_plus = std::asinh(p.rho_plus());
  if (!(rho0 > r_plus)) {
    throw domain_error("graph_depth: rho0 must exceed the boundary radius");
  }
  // Arc length element sqrt(A) drho with A = 1/(1+rho^2) + (1+rho^2) df^2;
  // rho = rho_plus + u^2 keeps the element bounded at the boundary:
  //   sqrt(A) drho = 2 sqrt(u^2/(1+rho^2) + (1+rho^2) u^2 df^2) du.
  const double u_end = std::sqrt(sinh_gap(r_plus, rho0 - r_plus));
  const double rp = p.rho_plus();
  return integrate(
      [&p, rp](double u) {
        const double rho = rp + u * u;
        const double f0 = 1.0 + rho * rho;
        return 2.0 * std::sqrt(u * u / f0 + f0 * p.u2_df2(u));
      },
      0.0, u_end, profile_quadrature(p));
}

GraphManifold ads_schwarzschild(int n, double m) {
  GraphManifold G;
  G.profile = RadialProfile::ads_schwarzschild(n, m);
  if (m == 0.0) {
    G.rho0 = 1.0;
    G.gamma = 0.0;
    G.depth_D = graph_depth(G.profile, G.rho0);
    return G;
  }
  const double r_plus = std::asinh(G.profile.rho_plus());
  G.rho0 = 2.2 * r_plus;
  const double rho_mid = std::sinh(0.5 * G.rho0);
  const double f0 = 1.0 + rho_mid * rho_mid;
  const double slope =
      G.profile.df_at_offset(sinh_gap(r_plus, 0.5 * G.rho0 - r_plus));
  G.gamma = 1.1 * f0 * slope;  // 1.1 sqrt(gradient decay at rho0/2)
  G.depth_D = graph_depth(G.profile, G.rho0);
  return G;
}

GraphManifold make_graph(RadialProfile profile, double rho0, double gamma) {
  GraphManifold G;
  G.profile = std::move(profile);
  G.rho0 = rho0;
  G.gamma = gamma;
  G.depth_D = graph_depth(G.profile, rho0);
  return G;
}

namespace {

double radial_coefficient(const GraphManifold& G, double rho) {
  const double f0 = 1.0 + rho * rho;
  if (G.profile.entire() && G.profile.kind() == ProfileKind::closed_form) {
    return 1.0 / f0;
  }
  const double slope = G.profile.df(rho);
  return 1.0 / f0 + f0 * slope * slope;
}

}  // namespace

double scalar_curvature(const GraphManifold& G, double rho) {
  const double rho_plus = G.profile.rho_plus();
  if (!G.profile.entire() && !(rho > rho_plus)) {
    throw domain_error("scalar_curvature: rho must exceed the boundary radius");
  }
  const int n = G.profile.n();
  const double f0 = 1.0 + rho * rho;
  const double A = radial_coefficient(G, rho);

  double Aprime;
  if (G.profile.kind() == ProfileKind::closed_form) {
    const double slope = G.profile.entire() ? 0.0 : G.profile.df(rho);
    const double w = slope * slope;
    // w' from the logarithmic derivative; the boundary factor of F_m enters
    // explicitly so nothing cancels.
    const double wprime =
        G.profile.entire()
            ? 0.0
            : 2.0 * slope * G.profile.d2f(rho);
    Aprime = -2.0 * rho / (f0 * f0) + 2.0 * rho * w + f0 * wprime;
  } else {
    const double h = std::min(1e-3 * (1.0 + rho), 0.125 * (rho - rho_plus));
    if (!(h > 0.0) || rho - 4.0 * h <= rho_plus) {
      throw numerical_error(
          "scalar_curvature: finite-difference stencil would cross the "
          "boundary sphere; no admissible step at this rho");
    }
    auto Af = [&G](double x) { return radial_coefficient(G, x); };
    Aprime = (-Af(rho + 2 * h) + 8 * Af(rho + h) - 8 * Af(rho - h) +
              Af(rho - 2 * h)) /
             (12.0 * h);
  }

  return (n - 1) * Aprime / (rho * A * A) +
         static_cast<double>(n - 1) * (n - 2) * (1.0 - 1.0 / A) / (rho * rho);
}

AdmissibilityReport check_admissibility(const GraphManifold& G,
                                        double curvature_tol) {
  AdmissibilityReport rep;
  const RadialProfile& p = G.profile;
  const int n = p.n();
  const double rho_plus = p.rho_plus();
  const double r_plus = std::asinh(rho_plus);

  rep.inside_collar = p.entire() || r_plus < 0.5 * G.rho0;

  // (b) slope decay: sample gradient_decay on r in [rho0/2, far]; the decay
  // is monotone for the model family but the scan does not assume it.
  {
    const double r_lo = std::max(0.5 * G.rho0, r_plus + 1e-12);
    const double r_hi = std::max(3.0 * G.rho0, 2.0 * r_plus + 6.0);
    double worst = 0.0;
    const int kSamples = 400;
    for (int i = 0; i <= kSamples; ++i) {
      const double r = r_lo + (r_hi - r_lo) * i / kSamples;
      const double rho = std::sinh(r);
      if (!(rho > rho_plus)) continue;
      worst = std::max(worst, gradient_decay(G, rho));
    }
    rep.slope_margin = G.gamma * G.gamma - worst;
    rep.slope_bounded = rep.slope_margin >= -1e-12 * (1.0 + G.gamma * G.gamma);
  }

  // (c) minimal boundary: slope blow-up just outside rho_plus (threshold
  // 1e6 guards tabulated inputs; analytic for the model).
  if (p.entire()) {
    rep.boundary_ok = true;
  } else {
    const double probe = std::max(rho_plus * 1e-14, 1e-300);
    rep.boundary_ok = p.df_at_offset(probe) > 1e6;
  }

  // (d) monotone profile (star-shaped, outer-minimizing level spheres).
  if (p.kind() == ProfileKind::closed_form) {
    rep.monotone_ok = true;  // df >= 0 by construction
  } else {
    rep.monotone_ok = true;
    double prev = p.f(rho_plus);
    const double rho_hi = rho_plus + std::max(4.0, 2.0 * rho_plus);
    const int kSamples = 500;
    for (int i = 1; i <= kSamples; ++i) {
      const double rho = rho_plus + (rho_hi - rho_plus) * i / kSamples;
      const double v = p.f(rho);
      if (v < prev - 1e-12 * (1.0 + std::fabs(prev))) {
        rep.monotone_ok = false;
        break;
      }
      prev = v;
    }
  }

  // (e) scalar curvature lower bound on a fixed grid.
  {
    double min_excess = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (int j = 0; j < 20; ++j) {
      const double rho = rho_plus + 0.1 + 0.35 * j;
      double R;
      try {
        R = scalar_curvature(G, rho);
      } catch (const numerical_error&) {
        ok = false;
        break;
      }
      min_excess = std::min(min_excess, R + n * (n - 1.0));
    }
    rep.curvature_excess = min_excess;
    rep.curvature_ok = ok && min_excess >= -curvature_tol;
  }

  return rep;
}

}  // namespace ahgm
