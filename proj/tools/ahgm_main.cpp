#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ahgm/acceptance.hpp"
#include "ahgm/capping.hpp"
#include "ahgm/errors.hpp"
#include "ahgm/family.hpp"
#include "ahgm/graph_model.hpp"
#include "ahgm/mass.hpp"

namespace {

ahgm::GraphManifold make_member(const std::string& model, int n, double m) {
  if (model != "ads") {
    throw ahgm::config_error("unknown model '" + model + "' (supported: ads)");
  }
  return ahgm::ads_schwarzschild(n, m);
}

int cmd_family(const ahgm::FamilySpec& spec, const std::string& out_path) {
  const ahgm::StabilityReport report = ahgm::run_family(spec);
  if (out_path.empty()) {
    std::fputs(ahgm::csv_string(report).c_str(), stdout);
  } else {
    ahgm::emit_csv(report, out_path);
    std::fprintf(stderr,
                 "wrote %zu rows to %s (rho0 %.6g, gamma %.6g, depth %.6g)\n",
                 report.rows.size(), out_path.c_str(), report.rho0,
                 report.gamma, report.depth_D);
  }
  return 0;
}

int cmd_mass(const std::string& model, int n, double m,
             const std::vector<double>& schedule) {
  const ahgm::GraphManifold G = make_member(model, n, m);
  const ahgm::MassReport rep = ahgm::mass_estimate(G, schedule);
  std::printf("# r            flux integrand\n");
  for (const auto& [r, value] : rep.samples) {
    std::printf("%-12.6g %.15g\n", r, value);
  }
  std::printf("mass        %.15g\n", rep.mass);
  std::printf("tail slope  %.6g (expected about %d)\n", rep.tail_slope, n);
  std::printf("converged   %s\n", rep.convergence_ok ? "yes" : "no");
  if (!rep.note.empty()) std::printf("note        %s\n", rep.note.c_str());
  return 0;
}

int cmd_cap(const std::string& model, int n, double m, double lambda, double L,
            long samples) {
  const ahgm::GraphManifold G = make_member(model, n, m);
  const ahgm::CapComplex cap = ahgm::build_cap(G, L, lambda);
  std::printf("eps* %.12g  eps_lambda %.12g  eps %.12g  C %.12g\n",
              cap.eps_star(), cap.eps_lambda(), cap.eps(),
              cap.descent_rate());
  const ahgm::MetricCheck mc = ahgm::verify_metric_lower_bound(cap, samples);
  std::printf("metric floor %.12g over %ld samples (worst t %.6g, theta "
              "%.4g): %s\n",
              mc.min_ratio, mc.samples, mc.worst_t, mc.worst_theta,
              mc.pass ? "PASS" : "FAIL");
  const ahgm::CornerCheck cc = ahgm::corner_smoothness(cap);
  std::printf("corner C1 (tol %.3g): %s\n", cc.tol,
              cc.pass ? "PASS" : "FAIL");
  const ahgm::CapBounds cb = ahgm::cap_bounds(G, cap);
  std::printf("diameter %.6g <= %.6g: %s   volume %.6g <= %.6g: %s\n",
              cb.measured_diam, cb.diam_bound, cb.diam_ok ? "PASS" : "FAIL",
              cb.measured_vol, cb.vol_bound, cb.vol_ok ? "PASS" : "FAIL");
  const bool ok = mc.pass && cc.pass && cb.diam_ok && cb.vol_ok;
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite) {
  const std::vector<ahgm::CriterionResult> results = ahgm::run_suite(suite);
  std::fputs(ahgm::format_results(results).c_str(), stdout);
  return ahgm::all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ahgm: asymptotically hyperbolic graphical manifolds - mass, level-set"
      " and region estimates, boundary capping"};
  app.set_config("--config");
  app.require_subcommand(1);

  ahgm::FamilySpec spec;
  std::string out_path;
  CLI::App* fam = app.add_subcommand(
      "family", "sweep a mass family and emit the stability table");
  fam->add_option("--model", spec.model, "model family")
      ->capture_default_str();
  fam->add_option("--n", spec.n, "slice dimension (>= 3)")
      ->capture_default_str();
  fam->add_option("--masses", spec.masses, "comma-separated masses")
      ->delimiter(',')
      ->required();
  fam->add_option("--rho", spec.rho, "measurement radius (geodesic)")
      ->capture_default_str();
  fam->add_option("--rho-bar", spec.rho_bar, "filling ball radius (area)")
      ->capture_default_str();
  fam->add_option("--beta", spec.beta, "height threshold multiplier (> 1)")
      ->capture_default_str();
  fam->add_option("--lambda", spec.lambda, "cap metric floor in (0,1)")
      ->capture_default_str();
  fam->add_option("--L", spec.L, "cap cylinder depth")->capture_default_str();
  fam->add_option("--cap-samples", spec.cap_samples,
                  "metric sweep size per member")
      ->capture_default_str();
  fam->add_option("--out", out_path, "CSV output path (default: stdout)");

  std::string mass_model = "ads";
  int mass_n = 3;
  double mass_m = 0.5;
  std::vector<double> schedule = ahgm::default_mass_schedule();
  CLI::App* mass_cmd = app.add_subcommand(
      "mass", "total mass of one member from the flux integrand");
  mass_cmd->add_option("--model", mass_model, "model family")
      ->capture_default_str();
  mass_cmd->add_option("--n", mass_n, "slice dimension (>= 3)")
      ->capture_default_str();
  mass_cmd->add_option("--m", mass_m, "mass parameter")
      ->capture_default_str();
  mass_cmd
      ->add_option("--r-schedule", schedule,
                   "comma-separated sample radii (geodesic, increasing)")
      ->delimiter(',');

  std::string cap_model = "ads";
  int cap_n = 3;
  double cap_m = 0.5;
  double cap_lambda = 0.9;
  double cap_L = 1.0;
  long cap_samples = 10000;
  CLI::App* cap_cmd = app.add_subcommand(
      "cap", "build a boundary cap and verify its metric floor");
  cap_cmd->add_option("--model", cap_model, "model family")
      ->capture_default_str();
  cap_cmd->add_option("--n", cap_n, "slice dimension (>= 3)")
      ->capture_default_str();
  cap_cmd->add_option("--m", cap_m, "mass parameter (> 0)")
      ->capture_default_str();
  cap_cmd->add_option("--lambda", cap_lambda, "metric floor in (0,1)")
      ->capture_default_str();
  cap_cmd->add_option("--L", cap_L, "cylinder depth")->capture_default_str();
  cap_cmd->add_option("--samples", cap_samples, "metric sweep size")
      ->capture_default_str();

  std::string suite = "all";
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run an acceptance suite");
  verify_cmd
      ->add_option("--suite", suite,
                   "core, mass, levels, regions, cap, or all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*fam) return cmd_family(spec, out_path);
    if (*mass_cmd) return cmd_mass(mass_model, mass_n, mass_m, schedule);
    if (*cap_cmd) {
      return cmd_cap(cap_model, cap_n, cap_m, cap_lambda, cap_L, cap_samples);
    }
    return cmd_verify(suite);
  } catch (const ahgm::config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const ahgm::io_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
