#pragma once

#include <string>
#include <vector>

#include "ahgm/graph_model.hpp"

namespace ahgm {

// One family sweep: which model members to build, where to measure them, and
// the capping parameters.  Every member shares the class constants frozen
// from the largest mass, so the emitted table tracks a single class.
struct FamilySpec {
  std::string model = "ads";
  int n = 3;
  std::vector<double> masses;
  double rho = 2.0;        // measurement radius (geodesic)
  double rho_bar = 3.0;    // filling ball radius (area radius)
  double beta = 2.0;       // height threshold multiplier (> 1)
  double lambda = 0.9;     // cap metric floor, in (0, 1)
  double L = 1.0;          // cap cylinder depth
  long cap_samples = 2000; // metric sweep size per member
};

// One CSV row.  Metrics that could not be computed for this member are NaN;
// cap_pass is "1"/"0" for a verified/failed cap, "na" for a member with no
// boundary sphere, "err" when the cap could not be built.
struct StabilityRow {
  double mass = 0.0;
  double mass_numeric = 0.0;
  double h0 = 0.0;
  double gap = 0.0;
  double gap_ratio = 0.0;
  double penrose_margin = 0.0;
  double vol_omega = 0.0;
  double vol_ball = 0.0;
  double vol_gap = 0.0;
  double flat_bound = 0.0;
  double D0 = 0.0;
  double C0_slack = 0.0;
  double cap_min_ratio = 0.0;
  std::string cap_pass = "na";
};

struct StabilityReport {
  FamilySpec spec;
  // Class constants frozen from the largest mass in the sweep.
  double rho0 = 0.0;
  double gamma = 0.0;
  double depth_D = 0.0;
  std::vector<StabilityRow> rows;
};

// Validates the spec (config_error on any bad field, before any numerics),
// freezes the class constants, then computes every row.  A metric that
// throws for one member leaves NaN in its columns without aborting the
// sweep.
StabilityReport run_family(const FamilySpec& spec);

// Deterministic CSV serialization: fixed header, "%.12g" fields, the literal
// "nan" for missing values.
std::string csv_string(const StabilityReport& report);

// csv_string written to path; io_error when the file cannot be written.
void emit_csv(const StabilityReport& report, const std::string& path);

}  // namespace ahgm
