#include "ahgm/mass.hpp"

#include <cmath>
#include <limits>

#include "ahgm/errors.hpp"
#include "ahgm/roots.hpp"

namespace ahgm {

double mass_integrand(const GraphManifold& G, double r) {
  const RadialProfile& p = G.profile;
  const int n = p.n();
  const double rho = std::sinh(r);
  if (!p.entire() && !(rho > p.rho_plus())) {
    throw domain_error("mass_integrand: r inside the boundary region");
  }
  if (p.entire() && p.kind() == ProfileKind::closed_form) return 0.0;

  const double ch = std::cosh(r);
  const double sh = rho;
  const double slope = p.df(rho);      // df/drho
  const double d2 = p.d2f(rho);
  // e = V^2 df (x) df as a radial tensor in the geodesic coordinate:
  // e_rr = phi(r) with phi = cosh^4(r) (df/drho)^2  (f'(r) = df * cosh).
  const double phi = ch * ch * ch * ch * slope * slope;
  const double phi_prime =
      4.0 * ch * ch * ch * sh * slope * slope +
      2.0 * ch * ch * ch * ch * ch * slope * d2;

  // Covariant pieces of the flux form evaluated on the unit radial normal.
  const double div_e = phi_prime + (n - 1) * (ch / sh) * phi;
  const double dtr_e = phi_prime;
  const double tre_dV = phi * sh;       // (tr e) dV(d_r), dV = sinh dr
  const double e_gradV = phi * sh;      // e(grad V, d_r)

  const double one_form = ch * (div_e - dtr_e) + tre_dV - e_gradV;
  // Sphere integral / (2 (n-1) omega): the angular volume cancels omega.
  return std::pow(sh, n - 1) * one_form / (2.0 * (n - 1));
}

MassReport mass_estimate(const GraphManifold& G,
                         const std::vector<double>& schedule) {
  if (schedule.size() < 4) {
    throw domain_error("mass_estimate: schedule needs at least 4 radii");
  }
  const double r_plus = std::asinh(G.profile.rho_plus());
  for (size_t i = 0; i < schedule.size(); ++i) {
    if (i > 0 && !(schedule[i] > schedule[i - 1])) {
      throw domain_error("mass_estimate: schedule must be increasing");
    }
    if (!(schedule[i] > r_plus)) {
      throw domain_error("mass_estimate: schedule radius inside the boundary");
    }
  }

  MassReport rep;
  rep.samples.reserve(schedule.size());
  for (double r : schedule) {
    rep.samples.emplace_back(r, mass_integrand(G, r));
  }

  const size_t N = rep.samples.size();
  const auto [r1, s1] = rep.samples[N - 3];
  const auto [r2, s2] = rep.samples[N - 2];
  const auto [r3, s3] = rep.samples[N - 1];
  const double scale = 1.0 + std::fabs(s3);
  const double d1 = s2 - s1;
  const double d2 = s3 - s2;
  const double eps_floor = 8.0 * std::numeric_limits<double>::epsilon() * scale;

  if (std::fabs(d1) <= eps_floor && std::fabs(d2) <= eps_floor) {
    rep.mass = s3;  // tail already flat at machine precision
  } else if (d1 * d2 <= 0.0 || std::fabs(d2) >= std::fabs(d1)) {
    rep.mass = s3;
    rep.note = "tail not geometrically decaying; kept last sample";
  } else {
    // a + b e^{-c r}: the difference ratio pins c, then the last sample
    // pins a.  The ratio is strictly decreasing in c, so bisection applies.
    const double target = d2 / d1;
    auto ratio = [&](double c) {
      return std::exp(-c * (r2 - r1)) *
             (1.0 - std::exp(-c * (r3 - r2))) /
             (1.0 - std::exp(-c * (r2 - r1)));
    };
    double c_lo = 1e-8, c_hi = 100.0;
    if (ratio(c_lo) <= target) {
      rep.mass = s3;
      rep.note = "tail decay slower than the fit window resolves";
    } else {
      const double c = bisect([&](double x) { return ratio(x) - target; },
                              c_lo, c_hi, 0.0, 200);
      const double t3 = d2 / (1.0 - std::exp(c * (r3 - r2)));
      rep.mass = s3 - t3;
    }
  }

  rep.convergence_ok = std::fabs(d2) <= 1e-6 * (1.0 + std::fabs(rep.mass));
  if (!rep.convergence_ok && rep.note.empty()) {
    rep.note = "last two samples differ beyond tolerance";
  }

  // Tail decay exponent: regression of log|sample - mass| on r over the
  // samples that sit meaningfully above roundoff.
  {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (const auto& [r, s] : rep.samples) {
      const double dev = std::fabs(s - rep.mass);
      if (dev > 1e4 * std::numeric_limits<double>::epsilon() * scale) {
        const double y = std::log(dev);
        sx += r;
        sy += y;
        sxx += r * r;
        sxy += r * y;
        ++cnt;
      }
    }
    if (cnt >= 2) {
      rep.tail_slope = -(cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    } else {
      rep.tail_slope = std::numeric_limits<double>::quiet_NaN();
      if (rep.note.empty()) rep.note = "tail at machine precision everywhere";
    }
  }
  return rep;
}

}  // namespace ahgm
