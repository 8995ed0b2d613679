#include "ahgm/family.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "ahgm/capping.hpp"
#include "ahgm/errors.hpp"
#include "ahgm/hyperbolic.hpp"
#include "ahgm/levels.hpp"
#include "ahgm/mass.hpp"
#include "ahgm/regions.hpp"

namespace ahgm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate(const FamilySpec& spec) {
  if (spec.model != "ads") {
    throw config_error("family: unknown model '" + spec.model +
                       "' (supported: ads)");
  }
  if (spec.n < 3) throw config_error("family: dimension n must be >= 3");
  if (spec.masses.empty()) {
    throw config_error("family: at least one mass is required");
  }
  for (double m : spec.masses) {
    if (!std::isfinite(m) || m < 0.0) {
      throw config_error("family: masses must be finite and >= 0");
    }
  }
  if (!(std::isfinite(spec.rho) && spec.rho > 0.0)) {
    throw config_error("family: rho must be positive");
  }
  if (!(std::isfinite(spec.rho_bar) && spec.rho_bar > 0.0)) {
    throw config_error("family: rho_bar must be positive");
  }
  if (!(spec.beta > 1.0)) throw config_error("family: beta must exceed 1");
  if (!(spec.lambda > 0.0 && spec.lambda < 1.0)) {
    throw config_error("family: lambda must lie in (0, 1)");
  }
  if (!(spec.L > 0.0)) throw config_error("family: L must be positive");
  if (spec.cap_samples < 100) {
    throw config_error("family: cap_samples must be >= 100");
  }
}

std::string format_field(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

StabilityReport run_family(const FamilySpec& spec) {
  validate(spec);

  StabilityReport report;
  report.spec = spec;

  const double m_max = *std::max_element(spec.masses.begin(),
                                         spec.masses.end());
  RadialProfile p_max = RadialProfile::ads_schwarzschild(spec.n, m_max);
  const double r_plus_max = std::asinh(p_max.rho_plus());
  if (m_max > 0.0) {
    if (!(spec.rho >= 2.03 * r_plus_max)) {
      throw config_error(
          "family: rho must clear twice the largest boundary sphere radius");
    }
    if (!(spec.rho_bar > p_max.rho_plus())) {
      throw config_error(
          "family: rho_bar must exceed the largest boundary sphere");
    }
    report.rho0 = std::min(2.2 * r_plus_max, 0.99 * spec.rho);
  } else {
    report.rho0 = std::min(1.0, 0.99 * spec.rho);
  }
  {
    GraphManifold probe = make_graph(p_max, report.rho0, 0.0);
    report.gamma =
        1.1 * std::sqrt(gradient_decay(probe, std::sinh(0.5 * report.rho0)));
    report.depth_D = probe.depth_D;
  }

  for (double m : spec.masses) {
    StabilityRow row;
    row.mass = m;
    row.mass_numeric = kNaN;
    row.h0 = kNaN;
    row.gap = kNaN;
    row.gap_ratio = kNaN;
    row.penrose_margin = kNaN;
    row.vol_omega = kNaN;
    row.vol_ball = kNaN;
    row.vol_gap = kNaN;
    row.flat_bound = kNaN;
    row.D0 = kNaN;
    row.C0_slack = kNaN;
    row.cap_min_ratio = kNaN;
    row.cap_pass = "err";

    GraphManifold G;
    bool have_graph = false;
    try {
      G = GraphManifold{RadialProfile::ads_schwarzschild(spec.n, m),
                        report.rho0, report.gamma, report.depth_D};
      have_graph = true;
    } catch (const std::exception&) {
    }

    if (have_graph) {
      try {
        row.mass_numeric = mass_estimate(G, default_mass_schedule()).mass;
      } catch (const std::exception&) {
      }
      try {
        const HeightReport hr = height_h0(G, m, spec.beta);
        row.h0 = hr.h0;
        row.gap = hr.gap;
        row.gap_ratio = hr.gap_ratio;
      } catch (const std::exception&) {
      }
      try {
        row.penrose_margin = penrose_check(G, m).margin;
      } catch (const std::exception&) {
      }
      try {
        row.vol_omega = omega_volume(G, spec.rho);
        row.vol_ball = ball_volume(spec.n, spec.rho);
        row.vol_gap = row.vol_omega - row.vol_ball;
      } catch (const std::exception&) {
      }
      if (!std::isnan(row.h0)) {
        try {
          row.flat_bound = flat_distance_parts(G, row.h0, spec.rho_bar).total;
        } catch (const std::exception&) {
        }
      }
      try {
        row.D0 = diameter_bound(G, spec.rho);
      } catch (const std::exception&) {
      }
      try {
        row.C0_slack = boundary_area_bound(G, m, spec.rho).slack;
      } catch (const std::exception&) {
      }

      if (m == 0.0) {
        row.cap_pass = "na";
      } else {
        try {
          const CapComplex cap = build_cap(G, spec.L, spec.lambda);
          const MetricCheck mc =
              verify_metric_lower_bound(cap, spec.cap_samples);
          const CapBounds cb = cap_bounds(G, cap);
          row.cap_min_ratio = mc.min_ratio;
          row.cap_pass = (mc.pass && cb.diam_ok && cb.vol_ok) ? "1" : "0";
        } catch (const std::exception&) {
          row.cap_pass = "err";
        }
      }
    }

    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string csv_string(const StabilityReport& report) {
  std::string out =
      "mass,mass_numeric,h0,gap,gap_ratio,penrose_margin,vol_omega,vol_ball,"
      "vol_gap,flat_bound,D0,C0_slack,cap_min_ratio,cap_pass\n";
  for (const StabilityRow& r : report.rows) {
    out += format_field(r.mass);
    out += ',';
    out += format_field(r.mass_numeric);
    out += ',';
    out += format_field(r.h0);
    out += ',';
    out += format_field(r.gap);
    out += ',';
    out += format_field(r.gap_ratio);
    out += ',';
    out += format_field(r.penrose_margin);
    out += ',';
    out += format_field(r.vol_omega);
    out += ',';
    out += format_field(r.vol_ball);
    out += ',';
    out += format_field(r.vol_gap);
    out += ',';
    out += format_field(r.flat_bound);
    out += ',';
    out += format_field(r.D0);
    out += ',';
    out += format_field(r.C0_slack);
    out += ',';
    out += format_field(r.cap_min_ratio);
    out += ',';
    out += r.cap_pass;
    out += '\n';
  }
  return out;
}

void emit_csv(const StabilityReport& report, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error("emit_csv: cannot open '" + path + "' for write");
  file << csv_string(report);
  file.flush();
  if (!file) throw io_error("emit_csv: write to '" + path + "' failed");
}

}  // namespace ahgm
