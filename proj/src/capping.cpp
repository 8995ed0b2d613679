#include "ahgm/capping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "ahgm/errors.hpp"
#include "ahgm/hyperbolic.hpp"
#include "ahgm/quadrature.hpp"
#include "ahgm/roots.hpp"

namespace ahgm {

namespace {

// sinh(r + a) - sinh(r) without cancellation.
double sinh_gap(double r, double a) {
  return 2.0 * std::cosh(r + 0.5 * a) * std::sinh(0.5 * a);
}

// exp(-1/(1-u^2)) extended by 0: smooth, flat to all orders at |u| = 1.
double mollifier(double u) {
  const double w = 1.0 - u * u;
  return w > 0.0 ? std::exp(-1.0 / w) : 0.0;
}

// Cubic C^1 joint between two branches: matches value and slope of the left
// branch at t0 and of the right branch at t1.
struct Bridge {
  double t0 = 0.0, t1 = 0.0;
  double v0 = 0.0, v1 = 0.0;
  double m0 = 0.0, m1 = 0.0;

  double value(double t) const {
    const double h = t1 - t0;
    const double x = (t - t0) / h;
    return v0 * ((2 * x - 3) * x * x + 1) + m0 * h * x * ((x - 2) * x + 1) +
           v1 * (3 - 2 * x) * x * x + m1 * h * x * x * (x - 1);
  }
  double slope(double t) const {
    const double h = t1 - t0;
    const double x = (t - t0) / h;
    return (v0 * 6 * x * (x - 1) + v1 * 6 * x * (1 - x)) / h +
           m0 * ((3 * x - 4) * x + 1) + m1 * x * (3 * x - 2);
  }
};

const char* binding_constraint(double eps_star, double two_L,
                               double eps_lambda) {
  if (two_L <= eps_star && two_L <= eps_lambda) return "cap depth (2L)";
  if (eps_lambda <= eps_star && eps_lambda <= two_L) {
    return "metric floor (eps_lambda)";
  }
  return "boundary sphere size (eps*)";
}

}  // namespace

// ---------------------------------------------------------------------------
// Impl
// ---------------------------------------------------------------------------

struct CapComplex::Impl {
  RadialProfile profile;
  int n = 3;
  double lambda = 0.0;
  double L = 0.0;
  double r_plus = 0.0, rho_plus = 0.0;
  double eps_star = 0.0, eps_lambda = 0.0, eps = 0.0, C = 0.0;
  double N = 0.0;  // psi normalizer

  // Graph side: root zone (0, b1.t0], bridge b1 around xi, line, bridge b2
  // around eps/2, identity beyond.
  double a_star = 0.0, xi = 0.0, delta0 = 0.0;
  double alpha_xi = 0.0, line_slope = 0.0;
  Bridge b1, b2;

  // Cap side, in u = -eps/2 - t: root zone (0, cb1.t0], bridge cb1 around
  // xi_c, line, bridge cb2 around u_id, shifted identity beyond.
  double q_c = 0.0, xi_c = 0.0;
  double beta_xi_c = 0.0, line_c_slope = 0.0, u_id = 0.0;
  Bridge cb1, cb2;

  // --- bowl profile --------------------------------------------------------

  double psi(double q) const {
    if (q <= 0.0) return 0.0;
    if (q >= 1.0) return 1.0;
    return N * integrate([](double u) { return 2.0 * mollifier(u); }, 0.0,
                         std::sqrt(q));
  }

  double psi_prime(double q) const {
    if (q <= 0.0) return std::numeric_limits<double>::infinity();
    if (q >= 1.0) return 0.0;
    return N * std::exp(-1.0 / (1.0 - q)) / std::sqrt(q);
  }

  double chi(double a) const {
    if (a > 0.0) throw domain_error("chi: defined on offsets <= 0");
    return -psi(-2.0 * a / eps_star);
  }

  double chi_prime(double a) const {
    if (a > 0.0) throw domain_error("chi_prime: defined on offsets <= 0");
    return (2.0 / eps_star) * psi_prime(-2.0 * a / eps_star);
  }

  // --- graph height against the geodesic offset -----------------------------

  double f_hat(double a) const {
    if (!(a >= 0.0)) throw domain_error("f_hat: offset must be >= 0");
    return profile.f_at_offset(sinh_gap(r_plus, a));
  }

  double f_hat_prime(double a) const {
    if (!(a > 0.0)) throw domain_error("f_hat_prime: offset must be > 0");
    return profile.df_at_offset(sinh_gap(r_plus, a)) * std::cosh(r_plus + a);
  }

  // --- graph-side reparametrization -----------------------------------------

  // Root zone: solves f_hat(alpha(t)) = C t in w = sqrt(a), where the height
  // is asymptotically linear and the bracket well conditioned.
  double alpha_tilde(double t) const {
    const double w =
        bisect([this, t](double w) { return f_hat(w * w) - C * t; }, 0.0,
               std::sqrt(a_star), 0.0, 120);
    return w * w;
  }

  double line(double t) const { return alpha_xi + line_slope * (t - xi); }

  double alpha(double t) const {
    if (!(t > 0.0)) throw domain_error("alpha: defined for t > 0");
    if (t >= b2.t1) return t;
    if (t > b2.t0) return b2.value(t);
    if (t >= b1.t1) return line(t);
    if (t > b1.t0) return b1.value(t);
    return alpha_tilde(t);
  }

  double alpha_prime(double t) const {
    if (!(t > 0.0)) throw domain_error("alpha_prime: defined for t > 0");
    if (t >= b2.t1) return 1.0;
    if (t > b2.t0) return b2.slope(t);
    if (t >= b1.t1) return line_slope;
    if (t > b1.t0) return b1.slope(t);
    return C / f_hat_prime(alpha_tilde(t));
  }

  // --- cap-side reparametrization via beta(u) = -alpha_c(-eps/2 - u) --------

  double beta_tilde(double u) const {
    return bisect(
        [this, u](double a) { return psi(2.0 * a / eps_star) - C * u; }, 0.0,
        0.5 * eps_star * q_c, 0.0, 120);
  }

  double line_c(double u) const {
    return beta_xi_c + line_c_slope * (u - xi_c);
  }

  double beta(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= cb2.t1) return u + 0.5 * eps;
    if (u > cb2.t0) return cb2.value(u);
    if (u >= cb1.t1) return line_c(u);
    if (u > cb1.t0) return cb1.value(u);
    return beta_tilde(u);
  }

  double beta_slope(double u) const {
    if (u <= 0.0) return 0.0;  // limit of C / chi'(0^-)
    if (u >= cb2.t1) return 1.0;
    if (u > cb2.t0) return cb2.slope(u);
    if (u >= cb1.t1) return line_c_slope;
    if (u > cb1.t0) return cb1.slope(u);
    return C / chi_prime(-beta_tilde(u));
  }

  double alpha_c(double t) const {
    if (!(t <= -0.5 * eps)) {
      throw domain_error("alpha_c: defined for t <= -eps/2");
    }
    return -beta(-0.5 * eps - t);
  }

  double alpha_c_prime(double t) const {
    if (!(t <= -0.5 * eps)) {
      throw domain_error("alpha_c_prime: defined for t <= -eps/2");
    }
    return beta_slope(-0.5 * eps - t);
  }

  // --- transition map --------------------------------------------------------

  CapPoint phi(double t) const {
    if (!(t > -r_plus)) throw domain_error("phi: t must exceed -r_plus");
    CapPoint p;
    if (t > 0.0) {
      p.offset = alpha(t);
      p.height = t <= b1.t0 ? C * t : f_hat(p.offset);
    } else if (t > -0.5 * eps) {
      p.offset = 0.0;
      p.height = C * t;
    } else {
      p.offset = alpha_c(t);
      const double u = -0.5 * eps - t;
      p.height = u <= cb1.t0 ? C * t : chi(p.offset) - L;
    }
    return p;
  }

  // Radial (T) and angular (S) metric ratio factors at reference coordinate
  // t.  Shares the root-zone bisection between value and slope, and uses the
  // exact height rate C on the root zones, where the height is C t by
  // construction.
  void components(double t, double& T, double& S) const {
    if (!(t > -r_plus)) {
      throw domain_error("metric_ratio: t must exceed -r_plus");
    }
    double img = 0.0;
    if (t > 0.0) {
      if (t <= b1.t0) {
        const double a = alpha_tilde(t);
        const double ap = C / f_hat_prime(a);
        const double ch = std::cosh(r_plus + a);
        T = ap * ap + ch * ch * C * C;
        img = a;
      } else {
        const double a = alpha(t);
        const double ap = alpha_prime(t);
        const double ch = std::cosh(r_plus + a);
        const double hs = ap * f_hat_prime(a);
        T = ap * ap + ch * ch * hs * hs;
        img = a;
      }
    } else if (t > -0.5 * eps) {
      const double ch = std::cosh(r_plus);
      T = ch * ch * C * C;
      img = 0.0;
    } else {
      const double u = -0.5 * eps - t;
      if (u <= cb1.t0) {
        const double b = u > 0.0 ? beta_tilde(u) : 0.0;
        const double bp = u > 0.0 ? C / chi_prime(-b) : 0.0;
        const double ch = std::cosh(r_plus - b);
        T = bp * bp + ch * ch * C * C;
        img = -b;
      } else {
        const double b = beta(u);
        const double bp = beta_slope(u);
        const double ch = std::cosh(r_plus - b);
        const double hs = bp * chi_prime(-b);
        T = bp * bp + ch * ch * hs * hs;
        img = -b;
      }
    }
    const double sh_img = std::sinh(r_plus + img);
    const double sh_ref = std::sinh(r_plus + t);
    S = (sh_img * sh_img) / (sh_ref * sh_ref);
  }

  // One bridge admissibility sweep: the blend must stay increasing, must not
  // overtake the reference coordinate, and must keep the radial factor above
  // lambda with headroom.
  bool graph_bridge_ok(const Bridge& b) const {
    const double floor = lambda + (1.0 - lambda) * 1e-3;
    for (int i = 0; i <= 64; ++i) {
      const double t = b.t0 + (b.t1 - b.t0) * i / 64.0;
      const double a = b.value(t);
      const double ap = b.slope(t);
      if (!(ap > 0.0) || !(a > 0.0)) return false;
      if (a > t * (1.0 + 1e-12)) return false;
      const double ch = std::cosh(r_plus + a);
      const double hs = ap * f_hat_prime(a);
      const double T = ap * ap + ch * ch * hs * hs;
      if (!(T >= floor)) return false;
    }
    return true;
  }

  bool cap_bridge_ok(const Bridge& b) const {
    const double floor = lambda + (1.0 - lambda) * 1e-3;
    for (int i = 0; i <= 64; ++i) {
      const double u = b.t0 + (b.t1 - b.t0) * i / 64.0;
      const double bv = b.value(u);
      const double bp = b.slope(u);
      if (!(bp > 0.0) || !(bv > 0.0)) return false;
      if (bv > u + 0.5 * eps + 1e-12 * eps) return false;
      const double ch = std::cosh(r_plus - bv);
      const double hs = bp * chi_prime(-bv);
      const double T = bp * bp + ch * ch * hs * hs;
      if (!(T >= floor)) return false;
    }
    return true;
  }
};

// ---------------------------------------------------------------------------
// Accessors
// ---------------------------------------------------------------------------

int CapComplex::n() const { return impl_->n; }
double CapComplex::lambda() const { return impl_->lambda; }
double CapComplex::depth() const { return impl_->L; }
double CapComplex::r_plus() const { return impl_->r_plus; }
double CapComplex::rho_plus() const { return impl_->rho_plus; }
double CapComplex::eps_star() const { return impl_->eps_star; }
double CapComplex::eps_lambda() const { return impl_->eps_lambda; }
double CapComplex::eps() const { return impl_->eps; }
double CapComplex::descent_rate() const { return impl_->C; }
double CapComplex::xi() const { return impl_->xi; }
double CapComplex::eta() const { return 0.5 * (impl_->b1.t1 - impl_->b1.t0); }
double CapComplex::xi_c() const { return impl_->xi_c; }
double CapComplex::eta_c() const {
  return 0.5 * (impl_->cb1.t1 - impl_->cb1.t0);
}
double CapComplex::delta0() const { return impl_->delta0; }
double CapComplex::psi_norm() const { return impl_->N; }

double CapComplex::f_hat(double a) const { return impl_->f_hat(a); }
double CapComplex::f_hat_prime(double a) const { return impl_->f_hat_prime(a); }
double CapComplex::chi(double a) const { return impl_->chi(a); }
double CapComplex::chi_prime(double a) const { return impl_->chi_prime(a); }
double CapComplex::alpha(double t) const { return impl_->alpha(t); }
double CapComplex::alpha_prime(double t) const { return impl_->alpha_prime(t); }
double CapComplex::alpha_c(double t) const { return impl_->alpha_c(t); }
double CapComplex::alpha_c_prime(double t) const {
  return impl_->alpha_c_prime(t);
}
CapPoint CapComplex::phi(double t) const { return impl_->phi(t); }

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

CapComplex build_cap(const GraphManifold& G, double L, double lambda) {
  const RadialProfile& p = G.profile;
  if (p.entire()) {
    throw domain_error("build_cap: the graph has no boundary sphere to cap");
  }
  if (!(L > 0.0)) throw domain_error("build_cap: depth L must be positive");
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw domain_error("build_cap: lambda must lie in (0, 1)");
  }

  auto im = std::make_shared<CapComplex::Impl>();
  im->profile = p;
  im->n = p.n();
  im->lambda = lambda;
  im->L = L;
  im->rho_plus = p.rho_plus();
  im->r_plus = std::asinh(p.rho_plus());

  im->eps_star = std::min(0.9 * im->r_plus, 1.0);
  const double target = std::pow(lambda, 0.25);
  im->eps_lambda = bisect(
      [&im, target](double e) {
        return std::sinh(im->r_plus - e) / std::sinh(im->r_plus + e) - target;
      },
      0.0, im->r_plus, 0.0, 120);

  im->eps = 0.9 * std::min({im->eps_star, 2.0 * L, im->eps_lambda});
  if (!(im->eps >= 1e-8)) {
    throw cap_build_error(
        std::string("build_cap: transition collar narrower than 1e-8; "
                    "binding constraint: ") +
        binding_constraint(im->eps_star, 2.0 * L, im->eps_lambda));
  }
  im->C = 2.0 * L / im->eps;

  im->N =
      1.0 / integrate([](double u) { return 2.0 * mollifier(u); }, 0.0, 1.0);

  // Zone where the bowl profile descends strictly faster than the cylinder.
  const double slope_target = 1.05 * im->C;
  im->q_c = bisect(
      [&im, slope_target](double q) {
        return (2.0 / im->eps_star) * im->psi_prime(q) - slope_target;
      },
      1e-300, 1.0 - 1e-12, 0.0, 200);
  im->xi_c =
      std::min({0.9 * im->psi(im->q_c) / im->C,
                0.9 * im->psi(2.0 * im->eps / (3.0 * im->eps_star)) / im->C,
                im->eps / 12.0});

  // Zone where the graph climbs strictly faster than the cylinder descends.
  const double a_probe = im->eps / 3.0;
  if (im->f_hat_prime(a_probe) > slope_target) {
    im->a_star = a_probe;
  } else {
    double lo = a_probe;
    int guard = 0;
    while (im->f_hat_prime(lo) <= slope_target) {
      lo *= 0.5;
      if (++guard > 200) {
        throw cap_build_error(
            "build_cap: graph slope never exceeds the cylinder rate near the "
            "boundary sphere");
      }
    }
    im->a_star = bisect(
        [&im, slope_target](double a) {
          return im->f_hat_prime(a) - slope_target;
        },
        lo, a_probe, 0.0, 120);
  }
  im->delta0 = im->f_hat(im->eps / 3.0) / im->C;
  im->xi = std::min(0.9 * im->f_hat(im->a_star) / im->C, im->eps / 6.0);
  im->alpha_xi = im->alpha_tilde(im->xi);
  im->line_slope = (0.5 * im->eps - im->alpha_xi) / (0.5 * im->eps - im->xi);

  // Graph-side bridges, halving the half-width until the sweep passes.
  {
    double eta = std::min(
        {im->eps / 50.0, im->xi / 4.0, (0.5 * im->eps - im->xi) / 4.0});
    bool ok = false;
    for (int k = 0; k <= 40 && !ok; ++k) {
      im->b1.t0 = im->xi - eta;
      im->b1.t1 = im->xi + eta;
      im->b1.v0 = im->alpha_tilde(im->b1.t0);
      im->b1.m0 = im->C / im->f_hat_prime(im->b1.v0);
      im->b1.v1 = im->line(im->b1.t1);
      im->b1.m1 = im->line_slope;

      im->b2.t0 = 0.5 * im->eps - eta;
      im->b2.t1 = 0.5 * im->eps + eta;
      im->b2.v0 = im->line(im->b2.t0);
      im->b2.m0 = im->line_slope;
      im->b2.v1 = im->b2.t1;
      im->b2.m1 = 1.0;

      ok = im->graph_bridge_ok(im->b1) && im->graph_bridge_ok(im->b2);
      if (!ok) eta *= 0.5;
    }
    if (!ok) {
      throw cap_build_error("build_cap: graph-side bridge smoothing failed");
    }
  }

  // Cap-side bridges.
  im->beta_xi_c = im->beta_tilde(im->xi_c);
  {
    double eta_c = std::min(im->eps / 50.0, im->xi_c / 4.0);
    bool ok = false;
    for (int k = 0; k <= 40 && !ok; ++k) {
      im->u_id = im->eps / 3.0 - 2.0 * eta_c;
      im->line_c_slope =
          (im->u_id + 0.5 * im->eps - im->beta_xi_c) / (im->u_id - im->xi_c);

      im->cb1.t0 = im->xi_c - eta_c;
      im->cb1.t1 = im->xi_c + eta_c;
      im->cb1.v0 = im->beta_tilde(im->cb1.t0);
      im->cb1.m0 = im->C / im->chi_prime(-im->cb1.v0);
      im->cb1.v1 = im->line_c(im->cb1.t1);
      im->cb1.m1 = im->line_c_slope;

      im->cb2.t0 = im->u_id - eta_c;
      im->cb2.t1 = im->u_id + eta_c;
      im->cb2.v0 = im->line_c(im->cb2.t0);
      im->cb2.m0 = im->line_c_slope;
      im->cb2.v1 = im->cb2.t1 + 0.5 * im->eps;
      im->cb2.m1 = 1.0;

      ok = im->cap_bridge_ok(im->cb1) && im->cap_bridge_ok(im->cb2);
      if (!ok) eta_c *= 0.5;
    }
    if (!ok) {
      throw cap_build_error("build_cap: cap-side bridge smoothing failed");
    }
  }

  return CapComplex(std::shared_ptr<const CapComplex::Impl>(std::move(im)));
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

double metric_ratio(const CapComplex& cap, double t, double theta) {
  double T = 0.0, S = 0.0;
  cap.impl_->components(t, T, S);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * c * T + s * s * S;
}

MetricCheck verify_metric_lower_bound(const CapComplex& cap, long samples) {
  const CapComplex::Impl& im = *cap.impl_;
  if (samples < 100) {
    throw domain_error("verify_metric_lower_bound: need at least 100 samples");
  }

  std::vector<double> ts;
  ts.reserve(static_cast<size_t>(samples) + 32);
  auto linear = [&ts](double a, double b, long k) {
    for (long i = 0; i < k; ++i) {
      ts.push_back(a + (b - a) * (static_cast<double>(i) + 0.5) /
                           static_cast<double>(k));
    }
  };
  // Geometric refinement of (anchor, anchor + span] into the anchor, fourteen
  // decades deep, so corner behavior is probed down to machine scale.
  auto toward = [&ts](double anchor, double span, long k) {
    for (long i = 0; i < k; ++i) {
      ts.push_back(anchor + span * std::pow(10.0, -14.0 *
                                                      (static_cast<double>(i) +
                                                       1.0) /
                                                      static_cast<double>(k)));
    }
  };

  const double eps = im.eps;
  const long q = samples / 100;
  // Graph side.
  toward(0.0, im.b1.t0, 22 * q + (samples - 100 * q));  // root zone
  linear(im.b1.t0, im.b1.t1, 6 * q);                    // bridge at xi
  linear(im.b1.t1, im.b2.t0, 10 * q);                   // line zone
  linear(im.b2.t0, im.b2.t1, 6 * q);                    // bridge at eps/2
  linear(im.b2.t1, eps, 6 * q);                         // identity tail
  // Cylinder.
  toward(0.0, -0.499 * eps, 5 * q);
  linear(-0.499 * eps, 0.0, 4 * q);
  toward(-0.5 * eps, 0.499 * eps, 5 * q);
  // Cap side, addressed in u = -eps/2 - t.
  auto linear_u = [&](double a, double b, long k) {
    for (long i = 0; i < k; ++i) {
      ts.push_back(-0.5 * eps - (a + (b - a) * (static_cast<double>(i) + 0.5) /
                                         static_cast<double>(k)));
    }
  };
  toward(-0.5 * eps, -im.cb1.t0, 20 * q);  // root zone
  linear_u(im.cb1.t0, im.cb1.t1, 4 * q);
  linear_u(im.cb1.t1, im.cb2.t0, 6 * q);
  linear_u(im.cb2.t0, im.cb2.t1, 3 * q);
  linear_u(im.cb2.t1, 0.5 * eps, 3 * q);
  // Zone anchors and corners.
  for (double t : {0.0, -0.5 * eps, -eps, eps, im.xi, im.b1.t0, im.b1.t1,
                   im.b2.t0, im.b2.t1, -0.5 * eps - im.cb1.t0,
                   -0.5 * eps - im.cb1.t1, -0.5 * eps - im.cb2.t1}) {
    ts.push_back(t);
  }

  MetricCheck out;
  out.min_ratio = std::numeric_limits<double>::infinity();
  long j = 0;
  for (double t : ts) {
    double T = 0.0, S = 0.0;
    im.components(t, T, S);
    // The ratio is cos^2 T + sin^2 S, so its minimum over directions sits on
    // an axis; the cycled interior angle exercises the mixed form.
    const double cyc = (static_cast<double>(j % 17) + 0.5) * (0.5 * kPi / 17.0);
    const double cs = std::cos(cyc);
    const double sn = std::sin(cyc);
    const double vals[3] = {T, cs * cs * T + sn * sn * S, S};
    const double angs[3] = {0.0, cyc, 0.5 * kPi};
    for (int i = 0; i < 3; ++i) {
      if (vals[i] < out.min_ratio) {
        out.min_ratio = vals[i];
        out.worst_t = t;
        out.worst_theta = angs[i];
      }
    }
    ++j;
  }
  out.samples = static_cast<long>(ts.size());
  out.pass = out.min_ratio >= im.lambda - 1e-8;
  return out;
}

CornerCheck corner_smoothness(const CapComplex& cap) {
  const double eps = cap.eps();
  const double C = cap.descent_rate();
  CornerCheck out;
  out.tol = 1e-6 * eps;
  out.rho_err_origin = std::numeric_limits<double>::infinity();
  out.s_err_origin = std::numeric_limits<double>::infinity();
  out.rho_err_junction = std::numeric_limits<double>::infinity();
  out.s_err_junction = std::numeric_limits<double>::infinity();

  for (int k = 3; k <= 20; ++k) {
    const double d = eps * std::pow(10.0, -k);
    {
      const CapPoint hi = cap.phi(d);
      const CapPoint lo = cap.phi(-d);
      out.rho_err_origin = std::min(
          out.rho_err_origin, std::fabs((hi.offset - lo.offset) / (2.0 * d)));
      out.s_err_origin =
          std::min(out.s_err_origin,
                   std::fabs((hi.height - lo.height) / (2.0 * d) - C));
    }
    {
      const double tj = -0.5 * eps;
      const CapPoint hi = cap.phi(tj + d);
      const CapPoint lo = cap.phi(tj - d);
      out.rho_err_junction =
          std::min(out.rho_err_junction,
                   std::fabs((hi.offset - lo.offset) / (2.0 * d)));
      out.s_err_junction =
          std::min(out.s_err_junction,
                   std::fabs((hi.height - lo.height) / (2.0 * d) - C));
    }
  }
  out.pass = out.rho_err_origin <= out.tol && out.s_err_origin <= out.tol &&
             out.rho_err_junction <= out.tol && out.s_err_junction <= out.tol;
  return out;
}

CapBounds cap_bounds(const GraphManifold& G, const CapComplex& cap) {
  const int n = cap.n();
  const double L = cap.depth();
  const double r_plus = cap.r_plus();
  const double rho_plus = cap.rho_plus();
  const double eps_star = cap.eps_star();
  const double N = cap.psi_norm();
  const double rho0 = G.rho0;
  if (!(rho0 > 0.0)) throw domain_error("cap_bounds: rho0 must be positive");

  const double ch0 = std::cosh(0.5 * rho0);
  CapBounds out;
  out.diam_bound = 2.0 * ch0 * L + 0.5 + ch0 + rho0;
  out.vol_bound = (L * ch0 + 1.0 / static_cast<double>(n - 1) + 2.0 * ch0) *
                  omega(n) * std::pow(rho_plus, n - 1);

  // Bowl meridian in v, r = r_plus - (eps*/2) v^2: dr = -eps* v dv and
  // d chi = -2 N exp(-1/(1 - v^2)) dv, both smooth through the rim.
  auto arc = [r_plus, eps_star, N](double v) {
    const double r = r_plus - 0.5 * eps_star * v * v;
    const double dr = eps_star * v;
    const double dchi = 2.0 * N * mollifier(v);
    const double ch = std::cosh(r);
    return std::sqrt(dr * dr + ch * ch * dchi * dchi);
  };
  const double meridian = integrate(arc, 0.0, 1.0);
  out.measured_diam =
      2.0 * L * std::cosh(r_plus) + meridian + 2.0 * (r_plus - 0.5 * eps_star);

  const double bowl =
      omega(n) * integrate(
                     [r_plus, eps_star, n, &arc](double v) {
                       const double r = r_plus - 0.5 * eps_star * v * v;
                       return std::pow(std::sinh(r), n - 1) * arc(v);
                     },
                     0.0, 1.0);
  out.measured_vol = ball_volume(n, r_plus - 0.5 * eps_star) + bowl +
                     omega(n) * std::pow(rho_plus, n - 1) * L *
                         std::cosh(r_plus);

  out.diam_ok = out.measured_diam <= out.diam_bound * (1.0 + 1e-12);
  out.vol_ok = out.measured_vol <= out.vol_bound * (1.0 + 1e-12);
  out.premise_flag = L > G.depth_D + 0.5 * std::sinh(rho0) * kPi *
                                         std::sqrt(1.0 + G.gamma * G.gamma);
  return out;
}

}  // namespace ahgm
