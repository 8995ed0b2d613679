#include "ahgm/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "ahgm/capping.hpp"
#include "ahgm/errors.hpp"
#include "ahgm/family.hpp"
#include "ahgm/graph_model.hpp"
#include "ahgm/hyperbolic.hpp"
#include "ahgm/levels.hpp"
#include "ahgm/mass.hpp"
#include "ahgm/regions.hpp"

namespace ahgm {

namespace {

std::string num(double v, const char* format = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

// Runs body (which fills pass and detail), stamping id/name/seconds.  A
// budget > 0 fails the criterion when exceeded; the detail string stays free
// of timing so reruns compare byte for byte.
template <class Fn>
CriterionResult timed(int id, const char* name, double budget, Fn&& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("unexpected exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  if (budget > 0.0 && r.seconds > budget) r.pass = false;
  return r;
}

// 1: numerical mass of every model member matches its parameter.
CriterionResult c1_mass_recovery() {
  return timed(1, "mass-recovery", 5.0, [](CriterionResult& r) {
    double worst = 0.0;
    bool converged = true;
    for (int n : {3, 4, 5}) {
      for (double m : {0.1, 0.5, 1.0}) {
        const GraphManifold G = ads_schwarzschild(n, m);
        const MassReport rep = mass_estimate(G, default_mass_schedule());
        worst = std::max(worst, std::fabs(rep.mass - m) / m);
        converged = converged && rep.convergence_ok;
      }
    }
    r.pass = worst <= 1e-3 && converged;
    r.detail = "max rel mass error " + num(worst) +
               " over n in {3,4,5} x m in {0.1,0.5,1} (tol 1e-3); "
               "extrapolation " +
               (converged ? "converged" : "did not converge");
  });
}

// 2: induced scalar curvature of every model member is constant -n(n-1).
CriterionResult c2_model_curvature() {
  return timed(2, "model-curvature", 5.0, [](CriterionResult& r) {
    double worst = 0.0;
    for (int n : {3, 4, 5}) {
      for (double m : {0.1, 0.5, 1.0}) {
        const GraphManifold G = ads_schwarzschild(n, m);
        const double rp = G.profile.rho_plus();
        for (int i = 0; i < 20; ++i) {
          const double rho = rp + std::pow(10.0, -2.0 + 4.0 * i / 19.0);
          worst = std::max(
              worst, std::fabs(scalar_curvature(G, rho) + n * (n - 1.0)));
        }
      }
    }
    r.pass = worst <= 1e-6;
    r.detail = "max |R + n(n-1)| = " + num(worst) +
               " over 9 members x 20 radii (tol 1e-6)";
  });
}

// 3: boundary-area mass inequality margin is nonnegative for every mass,
// with the n = 3, m = 1 margin hitting its closed form 4 pi (sqrt 2 - 1).
CriterionResult c3_penrose_margin() {
  return timed(3, "penrose-margin", 0.0, [](CriterionResult& r) {
    double min_margin = std::numeric_limits<double>::infinity();
    double min_weak = std::numeric_limits<double>::infinity();
    for (int n : {3, 4, 5}) {
      for (double m : {1e-4, 1e-3, 1e-2, 0.1, 0.3, 1.0, 3.0, 10.0}) {
        const PenroseResult pr = penrose_check(ads_schwarzschild(n, m), m);
        min_margin = std::min(min_margin, pr.margin);
        min_weak = std::min(min_weak, pr.weak_margin);
      }
    }
    const double exact =
        penrose_check(ads_schwarzschild(3, 1.0), 1.0).margin;
    const double err = std::fabs(exact - 4.0 * kPi * (std::sqrt(2.0) - 1.0));
    r.pass = min_margin >= 0.0 && min_weak >= 0.0 && err <= 1e-6;
    r.detail = "min margin " + num(min_margin) + ", min weak margin " +
               num(min_weak) + " over 24 members; n=3 m=1 closed-form error " +
               num(err) + " (tol 1e-6)";
  });
}

// 4: height gap along a mass ladder: the gap must grow with the mass and the
// normalized gap ratio must stay within a factor 2 across the ladder.
CriterionResult c4_height_gap_ladder() {
  return timed(4, "height-gap-ladder", 10.0, [](CriterionResult& r) {
    std::vector<double> gaps, ratios;
    for (int i = 0; i < 7; ++i) {
      const double m = std::pow(10.0, -3.0 + 2.0 * i / 6.0);
      const HeightReport hr = height_h0(ads_schwarzschild(3, m), m, 2.0);
      gaps.push_back(hr.gap);
      ratios.push_back(hr.gap_ratio);
    }
    bool mono = true;
    for (size_t i = 1; i < gaps.size(); ++i) {
      if (!(gaps[i] >= gaps[i - 1] * (1.0 - 1e-12))) mono = false;
    }
    const double spread =
        *std::max_element(ratios.begin(), ratios.end()) /
        *std::min_element(ratios.begin(), ratios.end());
    r.pass = mono && spread <= 2.0;
    r.detail = std::string("gap monotone in mass: ") + (mono ? "yes" : "no") +
               "; gap-ratio spread max/min = " + num(spread) +
               " over m in [1e-3, 1e-1] (clause requires <= 2)";
  });
}

// 5: volume of the graph region sits between the exact ball lower bound and
// both upper estimates, and the excess over the ball collapses with mass.
CriterionResult c5_volume_sandwich() {
  return timed(5, "volume-sandwich", 0.0, [](CriterionResult& r) {
    std::vector<double> gaps;
    bool sandwich = true;
    bool split_ok = true;
    for (double m : {0.5, 0.1, 0.02, 0.004}) {
      const GraphManifold G = ads_schwarzschild(3, m);
      const double vol = omega_volume(G, 2.0);
      const double h0 = height_h0(G, m, 2.0).h0;
      const VolumeSplit sp = omega_volume_split(G, 2.0, h0);
      split_ok = split_ok && std::fabs(sp.total - vol) <= 1e-8 * (1.0 + vol);
      const CoareaUpper co = coarea_volume_upper(G, 2.0, h0);
      const double D0 = diameter_bound(G, 2.0);
      const VolumeBounds vb = volume_bounds(G, m, 2.0, 2.0, D0);
      sandwich = sandwich && vb.lower <= vol + 1e-12 * (1.0 + vol) &&
                 vol <= co.upper * (1.0 + 1e-12) &&
                 vol <= vb.upper * (1.0 + 1e-12);
      gaps.push_back(vol - ball_volume(3, 2.0));
    }
    bool dec = true;
    for (size_t i = 1; i < gaps.size(); ++i) {
      if (!(gaps[i] < gaps[i - 1])) dec = false;
    }
    const double ratio = gaps.back() / gaps.front();
    r.pass = sandwich && split_ok && dec && ratio <= 1e-2;
    r.detail = "ball excess {" + num(gaps[0]) + ", " + num(gaps[1]) + ", " +
               num(gaps[2]) + ", " + num(gaps[3]) + "}, final/first = " +
               num(ratio) + " (clause <= 1e-2); bounds " +
               (sandwich ? "hold" : "VIOLATED") + "; split " +
               (split_ok ? "consistent" : "INCONSISTENT");
  });
}

// 6: ambient flat-distance upper bound along the mass family: the clauses
// ask for strict decay to below 5%, plus exact vanishing at zero mass.
CriterionResult c6_flat_distance_decay() {
  return timed(6, "flat-distance-decay", 0.0, [](CriterionResult& r) {
    std::vector<double> totals;
    for (double m : {0.5, 0.1, 0.02, 0.004}) {
      const GraphManifold G = ads_schwarzschild(3, m);
      const double h0 = height_h0(G, m, 2.0).h0;
      totals.push_back(flat_distance_parts(G, h0, 3.0).total);
    }
    bool dec = true;
    for (size_t i = 1; i < totals.size(); ++i) {
      if (!(totals[i] < totals[i - 1])) dec = false;
    }
    const double ratio = totals.back() / totals.front();
    const GraphManifold G0 = ads_schwarzschild(3, 0.0);
    const double h00 = height_h0(G0, 0.0, 2.0).h0;
    const double zero = flat_distance_parts(G0, h00, 3.0).total;
    r.pass = dec && ratio <= 0.05 && zero == 0.0;
    r.detail = "totals {" + num(totals[0]) + ", " + num(totals[1]) + ", " +
               num(totals[2]) + ", " + num(totals[3]) +
               "}; strictly decreasing: " + (dec ? "yes" : "no") +
               "; final/first = " + num(ratio) +
               " (clause <= 0.05); massless member exactly 0: " +
               (zero == 0.0 ? "yes" : "no");
  });
}

// 7: cap construction keeps the metric above every requested floor, with C^1
// corners, exact root-zone height, and diameter/volume inside their budgets.
CriterionResult c7_cap_metric_floor() {
  return timed(7, "cap-metric-floor", 30.0, [](CriterionResult& r) {
    const GraphManifold G = ads_schwarzschild(3, 0.5);
    bool ok = true;
    double worst_resid = 0.0;
    std::string mins;
    for (double lam : {0.5, 0.9, 0.99}) {
      const CapComplex cap = build_cap(G, 1.0, lam);
      const MetricCheck mc = verify_metric_lower_bound(cap, 10000);
      const CornerCheck cc = corner_smoothness(cap);
      const CapBounds cb = cap_bounds(G, cap);
      const double t_edge = cap.xi() - cap.eta();
      double resid = 0.0;
      for (int i = 0; i < 50; ++i) {
        const double t = t_edge * std::pow(10.0, -12.0 * i / 49.0);
        resid = std::max(resid, std::fabs(cap.f_hat(cap.alpha(t)) -
                                          cap.descent_rate() * t));
      }
      worst_resid = std::max(worst_resid, resid);
      ok = ok && mc.pass && cc.pass && cb.diam_ok && cb.vol_ok &&
           resid <= 1e-10;
      if (!mins.empty()) mins += ", ";
      mins += num(mc.min_ratio, "%.8g");
    }
    r.pass = ok;
    r.detail = "min metric ratios {" + mins +
               "} vs floors {0.5, 0.9, 0.99}; corners C1, "
               "diameter/volume budgets hold, max root-zone height residual " +
               num(worst_resid) + " (tol 1e-10)";
  });
}

// 8: closed-form geometry of the reference space: n = 3 ball volume, ball
// derivative = sphere area, isoperimetric slack, total solid angles.
CriterionResult c8_core_geometry() {
  return timed(8, "core-geometry", 0.0, [](CriterionResult& r) {
    bool ok = true;
    double worst_ball = 0.0;
    for (double rho : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const double ref = kPi * (std::sinh(2.0 * rho) - 2.0 * rho);
      worst_ball =
          std::max(worst_ball, std::fabs(ball_volume(3, rho) - ref) / ref);
    }
    ok = ok && worst_ball <= 1e-10;
    ok = ok && std::fabs(ball_volume(4, 1.0) - 6.875719588241427) <=
                   1e-10 * 6.875719588241427;
    ok = ok && std::fabs(ball_volume(5, 2.0) - 1066.048449114675) <=
                   1e-10 * 1066.048449114675;

    double worst_deriv = 0.0;
    for (int n : {3, 4, 5}) {
      for (double rho : {0.5, 1.0, 2.0}) {
        const double h = 1e-5;
        const double fd =
            (ball_volume(n, rho + h) - ball_volume(n, rho - h)) / (2.0 * h);
        const double area = sphere_area(n, rho);
        worst_deriv = std::max(worst_deriv, std::fabs(fd - area) / area);
      }
    }
    ok = ok && worst_deriv <= 1e-6;

    double min_slack = std::numeric_limits<double>::infinity();
    for (int n : {3, 4, 5}) {
      for (int i = 0; i < 20; ++i) {
        const double rr =
            std::pow(10.0, -3.0 + (std::log10(5.0) + 3.0) * i / 19.0);
        min_slack = std::min(min_slack, isoperimetric_check(n, rr));
      }
    }
    ok = ok && min_slack >= 0.0;

    ok = ok && std::fabs(omega(3) - 4.0 * kPi) <= 1e-13 &&
         std::fabs(omega(4) - 2.0 * kPi * kPi) <= 1e-13;

    r.pass = ok;
    r.detail = "ball-volume closed-form rel " + num(worst_ball) +
               " (tol 1e-10); d(vol)/dr vs area rel " + num(worst_deriv) +
               " (tol 1e-6); min isoperimetric slack " + num(min_slack);
  });
}

CriterionResult run_one(int id) {
  switch (id) {
    case 1:
      return c1_mass_recovery();
    case 2:
      return c2_model_curvature();
    case 3:
      return c3_penrose_margin();
    case 4:
      return c4_height_gap_ladder();
    case 5:
      return c5_volume_sandwich();
    case 6:
      return c6_flat_distance_decay();
    case 7:
      return c7_cap_metric_floor();
    default:
      return c8_core_geometry();
  }
}

std::vector<CriterionResult> run_ids(std::initializer_list<int> ids) {
  std::vector<CriterionResult> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(run_one(id));
  return out;
}

// 9: every criterion and the canonical family CSV reproduce byte for byte.
CriterionResult c9_determinism(const std::vector<CriterionResult>& first) {
  return timed(9, "determinism", 0.0, [&first](CriterionResult& r) {
    std::string diverged;
    for (const CriterionResult& a : first) {
      const CriterionResult b = run_one(a.id);
      if (a.pass != b.pass || a.detail != b.detail) {
        if (!diverged.empty()) diverged += ", ";
        diverged += a.name;
      }
    }

    FamilySpec spec;
    spec.masses = {1.0, 0.5, 0.1, 0.02};
    const std::string csv1 = csv_string(run_family(spec));
    const std::string csv2 = csv_string(run_family(spec));
    if (csv1 != csv2) {
      if (!diverged.empty()) diverged += ", ";
      diverged += "family-csv";
    }

    r.pass = diverged.empty();
    r.detail = r.pass
                   ? "criteria 1-8 and the family CSV reproduce byte for byte"
                   : "diverged across reruns: " + diverged;
  });
}

}  // namespace

std::vector<CriterionResult> run_suite(const std::string& suite) {
  if (suite == "core") return run_ids({8});
  if (suite == "mass") return run_ids({1, 2});
  if (suite == "levels") return run_ids({3, 4});
  if (suite == "regions") return run_ids({5, 6});
  if (suite == "cap") return run_ids({7});
  if (suite == "all") {
    std::vector<CriterionResult> results =
        run_ids({1, 2, 3, 4, 5, 6, 7, 8});
    results.push_back(c9_determinism(results));
    return results;
  }
  throw config_error("run_suite: unknown suite '" + suite +
                     "' (expected core, mass, levels, regions, cap, or all)");
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const CriterionResult& r : results) {
    char head[96];
    std::snprintf(head, sizeof head, "%s  %d  %-20s %8.2fs  ",
                  r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
    out += head;
    out += r.detail;
    out += '\n';
  }
  return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace ahgm
