#include "ahgm/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "ahgm/errors.hpp"
#include "ahgm/quadrature.hpp"
#include "ahgm/roots.hpp"

namespace ahgm {

namespace {

constexpr double kProfileRMax = 35.0;   // height tail beyond this is < 1e-40
constexpr double kCheckpointDr = 0.25;  // checkpoint spacing in geodesic r

const QuadratureOptions kProfileQuad{1e-15, 1e-13, 15};

// sinh(r + a) - sinh(r) without cancellation.
double sinh_gap(double r, double a) {
  return 2.0 * std::cosh(r + 0.5 * a) * std::sinh(0.5 * a);
}

}  // namespace

double horizon_radius(int n, double m) {
  if (n < 3) throw domain_error("horizon_radius: n must be >= 3");
  if (m < 0.0) throw domain_error("horizon_radius: mass must be >= 0");
  if (m == 0.0) return 0.0;
  auto g = [n, m](double rho) {
    return std::pow(rho, n) + std::pow(rho, n - 2) - 2.0 * m;
  };
  double hi = std::max(1.0, std::pow(2.0 * m, 1.0 / n)) + 1.0;
  const double root = bisect(g, 0.0, hi, 0.0, 200);
  if (std::fabs(g(root)) > 1e-12 * (1.0 + 2.0 * m)) {
    throw numerical_error("horizon_radius: residual above tolerance");
  }
  return root;
}

// ---------------------------------------------------------------------------
// Backend
// ---------------------------------------------------------------------------

struct RadialProfile::Backend {
  ProfileKind kind = ProfileKind::closed_form;
  int n = 3;
  double rho_plus = 0.0;
  double sup = 0.0;

  // closed form
  double m = std::numeric_limits<double>::quiet_NaN();
  double r_plus = 0.0;
  std::vector<double> checkpoint_f;  // heights at r_plus + k * kCheckpointDr

  // tabulated
  std::vector<double> t_rho, t_f, t_d;

  // --- closed-form internals -----------------------------------------------

  // Smooth cofactor S with F_m(rho) = (rho - rho_plus) S(rho); S > 0 past
  // the boundary, so the slope's horizon singularity lives entirely in the
  // explicit (rho - rho_plus) factor.
  double cofactor(double rho) const {
    double s = rho + rho_plus;
    for (int j = 1; j <= n - 2; ++j) {
      s += 2.0 * m * std::pow(rho, -j) * std::pow(rho_plus, -(n - 1 - j));
    }
    return s;
  }

  double cofactor_prime(double rho) const {
    double s = 1.0;
    for (int j = 1; j <= n - 2; ++j) {
      s -= 2.0 * m * j * std::pow(rho, -j - 1) * std::pow(rho_plus, -(n - 1 - j));
    }
    return s;
  }

  double cf_u2_df2(double u) const {
    if (m == 0.0) return 0.0;
    const double rho = rho_plus + u * u;
    const double f0 = 1.0 + rho * rho;
    return 2.0 * m * std::pow(rho, 2 - n) / (cofactor(rho) * f0 * f0);
  }

  double cf_df_at(double delta) const {
    if (m == 0.0) return 0.0;
    if (!(delta > 0.0)) {
      throw domain_error("df: slope defined only past the boundary sphere");
    }
    const double rho = rho_plus + delta;
    const double f0 = 1.0 + rho * rho;
    return std::sqrt(2.0 * m * std::pow(rho, 2 - n) /
                     (delta * cofactor(rho))) /
           f0;
  }

  double cf_f_at(double delta) const {
    if (m == 0.0 || delta <= 0.0) return 0.0;
    const double rho = rho_plus + delta;
    const double r = std::asinh(rho);
    const long K = static_cast<long>(checkpoint_f.size()) - 1;
    if (r >= r_plus + K * kCheckpointDr) return sup;
    const long k = std::min<long>(
        K - 1, static_cast<long>((r - r_plus) / kCheckpointDr));
    if (k <= 0) {
      // First collar segment: rho = rho_plus + u^2 turns the slope's
      // inverse-sqrt singularity into a smooth even integrand.
      return 2.0 * integrate(
                       [this](double u) { return std::sqrt(cf_u2_df2(u)); },
                       0.0, std::sqrt(delta), kProfileQuad);
    }
    const double rk = r_plus + k * kCheckpointDr;
    return checkpoint_f[k] +
           integrate(
               [this](double t) {
                 const double rt = std::sinh(t);
                 return cf_df_at(rt - rho_plus) * std::cosh(t);
               },
               rk, r, kProfileQuad);
  }

  // --- tabulated internals --------------------------------------------------

  long cell(double rho) const {
    // largest i with t_rho[i] <= rho, clamped to a valid cell index
    auto it = std::upper_bound(t_rho.begin(), t_rho.end(), rho);
    long i = static_cast<long>(it - t_rho.begin()) - 1;
    return std::clamp<long>(i, 0, static_cast<long>(t_rho.size()) - 2);
  }

  double hermite(double rho, int deriv) const {
    const long i = cell(rho);
    const double h = t_rho[i + 1] - t_rho[i];
    const double t = (rho - t_rho[i]) / h;
    const double f0 = t_f[i], f1 = t_f[i + 1];
    const double m0 = t_d[i], m1 = t_d[i + 1];
    switch (deriv) {
      case 0:
        return f0 * ((2 * t - 3) * t * t + 1) + m0 * h * t * ((t - 2) * t + 1) +
               f1 * (3 - 2 * t) * t * t + m1 * h * t * t * (t - 1);
      case 1:
        return (f0 * 6 * t * (t - 1) + f1 * 6 * t * (1 - t)) / h +
               m0 * ((3 * t - 4) * t + 1) + m1 * t * (3 * t - 2);
      default:
        return (f0 * (12 * t - 6) + f1 * (6 - 12 * t)) / (h * h) +
               (m0 * (6 * t - 4) + m1 * (6 * t - 2)) / h;
    }
  }

  double tab_f(double rho) const {
    if (rho <= t_rho.front()) return t_f.front();
    if (rho >= t_rho.back()) return t_f.back();
    return hermite(rho, 0);
  }

  double tab_df(double rho) const {
    if (rho < t_rho.front()) {
      throw domain_error("df: slope defined only past the boundary sphere");
    }
    if (rho >= t_rho.back()) return 0.0;
    return hermite(rho, 1);
  }
};

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

int RadialProfile::n() const { return impl_->n; }
ProfileKind RadialProfile::kind() const { return impl_->kind; }
double RadialProfile::rho_plus() const { return impl_->rho_plus; }
bool RadialProfile::entire() const { return impl_->rho_plus == 0.0; }
double RadialProfile::mass_parameter() const { return impl_->m; }
double RadialProfile::sup_f() const { return impl_->sup; }

double RadialProfile::f(double rho) const {
  if (!(rho >= 0.0)) throw domain_error("f: rho must be >= 0");
  if (impl_->kind == ProfileKind::closed_form) {
    return impl_->cf_f_at(rho - impl_->rho_plus);
  }
  return impl_->tab_f(rho);
}

double RadialProfile::f_at_offset(double delta) const {
  if (impl_->kind == ProfileKind::closed_form) return impl_->cf_f_at(delta);
  if (delta <= 0.0) return impl_->t_f.front();
  return impl_->tab_f(impl_->rho_plus + delta);
}

double RadialProfile::df(double rho) const {
  if (impl_->kind == ProfileKind::closed_form) {
    if (impl_->m == 0.0) {
      if (!(rho > 0.0)) throw domain_error("df: rho must be > 0");
      return 0.0;
    }
    return impl_->cf_df_at(rho - impl_->rho_plus);
  }
  return impl_->tab_df(rho);
}

double RadialProfile::df_at_offset(double delta) const {
  if (impl_->kind == ProfileKind::closed_form) return impl_->cf_df_at(delta);
  return impl_->tab_df(impl_->rho_plus + std::max(delta, 0.0));
}

double RadialProfile::d2f(double rho) const {
  if (impl_->kind == ProfileKind::closed_form) {
    if (impl_->m == 0.0) return 0.0;
    const double delta = rho - impl_->rho_plus;
    const double slope = impl_->cf_df_at(delta);
    // d2f = df * (log df^2)' / 2 with the boundary factor split off exactly.
    const double f0p_over_f0 = 2.0 * rho / (1.0 + rho * rho);
    const double fm_log =
        1.0 / delta + impl_->cofactor_prime(rho) / impl_->cofactor(rho);
    return 0.5 * slope *
           ((2.0 - impl_->n) / rho - fm_log - 2.0 * f0p_over_f0);
  }
  if (rho < impl_->t_rho.front() || rho >= impl_->t_rho.back()) return 0.0;
  return impl_->hermite(rho, 2);
}

double RadialProfile::u2_df2(double u) const {
  if (impl_->kind == ProfileKind::closed_form) return impl_->cf_u2_df2(u);
  const double slope = impl_->tab_df(impl_->rho_plus + u * u);
  return u * u * slope * slope;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

RadialProfile RadialProfile::ads_schwarzschild(int n, double m) {
  if (n < 3) throw domain_error("ads_schwarzschild: n must be >= 3");
  if (m < 0.0) throw domain_error("ads_schwarzschild: mass must be >= 0");
  auto be = std::make_shared<Backend>();
  be->kind = ProfileKind::closed_form;
  be->n = n;
  be->m = m;
  if (m == 0.0) {
    be->rho_plus = 0.0;
    be->sup = 0.0;
    return RadialProfile(std::move(be));
  }
  be->rho_plus = horizon_radius(n, m);
  be->r_plus = std::asinh(be->rho_plus);

  // Height checkpoints every kCheckpointDr in geodesic r.  The first segment
  // crosses the slope singularity and is done in the u parameter; later
  // segments integrate df dr directly.  All subsequent f-evaluations reuse
  // the nearest checkpoint, so a single evaluation never re-integrates more
  // than one segment.
  const long K = static_cast<long>(
      std::ceil((kProfileRMax - be->r_plus) / kCheckpointDr));
  be->checkpoint_f.resize(K + 1);
  be->checkpoint_f[0] = 0.0;
  const double u1 = std::sqrt(sinh_gap(be->r_plus, kCheckpointDr));
  be->checkpoint_f[1] =
      2.0 * integrate([&be](double u) { return std::sqrt(be->cf_u2_df2(u)); },
                      0.0, u1, kProfileQuad);
  for (long k = 2; k <= K; ++k) {
    const double ra = be->r_plus + (k - 1) * kCheckpointDr;
    const double rb = be->r_plus + k * kCheckpointDr;
    be->checkpoint_f[k] =
        be->checkpoint_f[k - 1] +
        integrate(
            [&be](double t) {
              return be->cf_df_at(std::sinh(t) - be->rho_plus) * std::cosh(t);
            },
            ra, rb, kProfileQuad);
  }
  be->sup = be->checkpoint_f[K];
  return RadialProfile(std::move(be));
}

RadialProfile RadialProfile::from_table(int n, std::vector<double> rho,
                                        std::vector<double> f,
                                        std::vector<double> df) {
  if (n < 3) throw domain_error("from_table: n must be >= 3");
  if (rho.size() < 4) throw config_error("profile table needs >= 4 rows");
  if (f.size() != rho.size() || (!df.empty() && df.size() != rho.size())) {
    throw config_error("profile table columns have mismatched lengths");
  }
  for (size_t i = 0; i < rho.size(); ++i) {
    if (!std::isfinite(rho[i]) || !std::isfinite(f[i])) {
      throw config_error("profile table contains non-finite entries");
    }
    if (i > 0 && !(rho[i] > rho[i - 1])) {
      throw config_error("profile table rho column must be strictly increasing");
    }
  }
  if (!(rho.front() >= 0.0)) {
    throw config_error("profile table rho column must be nonnegative");
  }

  auto be = std::make_shared<Backend>();
  be->kind = ProfileKind::tabulated;
  be->n = n;
  be->rho_plus = rho.front();
  be->sup = *std::max_element(f.begin(), f.end());
  be->t_rho = std::move(rho);
  be->t_f = std::move(f);

  if (!df.empty()) {
    be->t_d = std::move(df);
  } else {
    // Fritsch-Carlson slopes: shape-preserving, so a monotone table yields a
    // monotone interpolant.
    const auto& x = be->t_rho;
    const auto& y = be->t_f;
    const size_t N = x.size();
    std::vector<double> h(N - 1), d(N - 1);
    for (size_t i = 0; i + 1 < N; ++i) {
      h[i] = x[i + 1] - x[i];
      d[i] = (y[i + 1] - y[i]) / h[i];
    }
    std::vector<double> s(N);
    for (size_t i = 1; i + 1 < N; ++i) {
      if (d[i - 1] * d[i] <= 0.0) {
        s[i] = 0.0;
      } else {
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        s[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
      }
    }
    auto endpoint = [](double h0, double h1, double d0, double d1) {
      double s0 = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
      if (s0 * d0 <= 0.0) {
        s0 = 0.0;
      } else if (d0 * d1 <= 0.0 && std::fabs(s0) > 3.0 * std::fabs(d0)) {
        s0 = 3.0 * d0;
      }
      return s0;
    };
    s[0] = endpoint(h[0], h[1], d[0], d[1]);
    s[N - 1] = endpoint(h[N - 2], h[N - 3], d[N - 2], d[N - 3]);
    be->t_d = std::move(s);
  }
  return RadialProfile(std::move(be));
}

RadialProfile RadialProfile::load_table(int n, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open profile table: " + path);
  std::vector<double> rho, f, df;
  std::string line;
  long lineno = 0;
  bool has_slope_column = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    double a, b;
    if (!(row >> a)) continue;  // blank / comment-only line
    if (!(row >> b)) {
      throw config_error("profile table " + path + " line " +
                         std::to_string(lineno) + ": expected 2 or 3 columns");
    }
    double c;
    if (row >> c) {
      if (!rho.empty() && !has_slope_column) {
        throw config_error("profile table " + path +
                           ": inconsistent column count");
      }
      has_slope_column = true;
      df.push_back(c);
    } else if (has_slope_column) {
      throw config_error("profile table " + path +
                         ": inconsistent column count");
    }
    rho.push_back(a);
    f.push_back(b);
  }
  return from_table(n, std::move(rho), std::move(f), std::move(df));
}

}  // namespace ahgm
