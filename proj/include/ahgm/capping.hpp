#pragma once

#include <memory>

#include "ahgm/graph_model.hpp"

namespace ahgm {

struct CapPoint {
  double offset = 0.0;  // geodesic radial offset from the boundary sphere
  double height = 0.0;  // ambient height s
};

class CapComplex;
struct CapBounds;
struct MetricCheck;
CapComplex build_cap(const GraphManifold& G, double L, double lambda);
double metric_ratio(const CapComplex& cap, double t, double theta);
MetricCheck verify_metric_lower_bound(const CapComplex& cap, long samples);
CapBounds cap_bounds(const GraphManifold& G, const CapComplex& cap);

// Transition complex that closes the boundary sphere of a graph with a
// cylinder of depth L and a flat-bottomed unit bowl, keeping the induced
// metric above lambda times the reference annulus metric
//     dt^2 + sinh^2(r_plus + t) sigma.
//
// Zones of the transition map phi (t the reference radial coordinate):
//   t in (0, eps):        (alpha(t), f_hat(alpha(t)))          graph side
//   t in (-eps/2, 0]:     (0, C t)                             cylinder
//   t in (-eps, -eps/2]:  (alpha_c(t), chi(alpha_c(t)) - L)    bowl side
// alpha(t) = t past eps/2 and alpha_c(t) = t near -eps (up to the smoothing
// bridges), so the complex glues onto the untouched graph and bowl.  On the
// root zones flanking both corners the height is exactly C t by
// construction, which is what makes the corners C^1.
class CapComplex {
 public:
  int n() const;
  double lambda() const;
  double depth() const;         // cylinder depth L
  double r_plus() const;        // geodesic radius of the boundary sphere
  double rho_plus() const;      // area radius of the boundary sphere
  double eps_star() const;      // bowl profile half-width
  double eps_lambda() const;    // largest collar with sphere ratio >= lambda^{1/4}
  double eps() const;           // transition half-width (0.9 min{eps*, 2L, eps_lambda})
  double descent_rate() const;  // C = 2L / eps
  double xi() const;            // graph-side root zone extent (in t)
  double eta() const;           // graph-side bridge half-width at xi
  double xi_c() const;          // cap-side root zone extent (in u = -eps/2 - t)
  double eta_c() const;         // cap-side bridge half-width
  double delta0() const;        // root-zone height scale f_hat(eps/3) / C
  double psi_norm() const;      // normalizer of the bowl mollifier

  // Graph height and slope as functions of the geodesic offset a >= 0.
  double f_hat(double a) const;
  double f_hat_prime(double a) const;

  // Bowl profile on offsets a <= 0: chi(0) = 0, chi == -1 past -eps_star/2,
  // smooth and increasing, with chi'(0^-) = +infinity.
  double chi(double a) const;
  double chi_prime(double a) const;

  double alpha(double t) const;  // graph-side reparametrization, t > 0
  double alpha_prime(double t) const;
  double alpha_c(double t) const;  // cap-side reparametrization, t <= -eps/2
  double alpha_c_prime(double t) const;

  CapPoint phi(double t) const;

 private:
  struct Impl;
  friend CapComplex build_cap(const GraphManifold&, double, double);
  friend double metric_ratio(const CapComplex&, double, double);
  friend MetricCheck verify_metric_lower_bound(const CapComplex&, long);
  friend CapBounds cap_bounds(const GraphManifold&, const CapComplex&);
  explicit CapComplex(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// build_cap constructs the transition complex for the boundary sphere of G.
// It throws cap_build_error (naming the binding constraint) when no collar
// wide enough to smooth exists, e.g. L or the boundary sphere too small or
// lambda too close to 1.
//
// metric_ratio is the induced-vs-reference metric ratio at reference
// coordinate t in direction theta (0 = radial, pi/2 = angular):
//     cos^2(theta) T(t) + sin^2(theta) sinh^2(r_plus + offset(t)) /
//                                      sinh^2(r_plus + t).

struct MetricCheck {
  double min_ratio = 0.0;
  double worst_t = 0.0;
  double worst_theta = 0.0;
  long samples = 0;
  bool pass = false;  // min_ratio >= lambda - 1e-8
};

// Deterministic stratified sweep of metric_ratio over every zone of the
// complex, geometrically refined into both corners, crossed with a fixed
// direction cycle plus the two axis directions.
MetricCheck verify_metric_lower_bound(const CapComplex& cap, long samples);

struct CornerCheck {
  double rho_err_origin = 0.0;    // |central FD of the offset| at t = 0
  double s_err_origin = 0.0;      // |central FD of the height - C| at t = 0
  double rho_err_junction = 0.0;  // same at t = -eps/2
  double s_err_junction = 0.0;
  double tol = 0.0;               // 1e-6 * eps
  bool pass = false;
};

// Central finite differences across both corners over a geometric step
// sweep; each component must land within tol of the shared derivative
// (0 radially, C in height) at some step.
CornerCheck corner_smoothness(const CapComplex& cap);

struct CapBounds {
  double diam_bound = 0.0;  // 2 cosh(rho0/2) L + 1/2 + cosh(rho0/2) + rho0
  double vol_bound = 0.0;   // (L cosh(rho0/2) + 1/(n-1) + 2 cosh(rho0/2)) area
  double measured_diam = 0.0;
  double measured_vol = 0.0;
  bool diam_ok = false;
  bool vol_ok = false;
  // True when L alone dominates the collar depth budget; informational.
  bool premise_flag = false;
};

// Compares the realized cap (cylinder + bowl) against the stated diameter
// and volume budgets in terms of the collar datum rho0 of G.
CapBounds cap_bounds(const GraphManifold& G, const CapComplex& cap);

}  // namespace ahgm
