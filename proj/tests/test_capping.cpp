#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "ahgm/capping.hpp"
#include "ahgm/errors.hpp"
#include "ahgm/hyperbolic.hpp"

using namespace ahgm;

namespace {

GraphManifold reference_graph() { return ads_schwarzschild(3, 0.5); }

}  // namespace

TEST_CASE("collar width selection") {
  const auto G = reference_graph();
  const auto cap = build_cap(G, 1.0, 0.9);
  const double r_plus = std::asinh(G.profile.rho_plus());

  CHECK(cap.eps_star() == doctest::Approx(0.9 * r_plus).epsilon(1e-14));
  CHECK(cap.eps_star() ==
        doctest::Approx(0.5743159655774818).epsilon(1e-12));
  CHECK(cap.eps_lambda() ==
        doctest::Approx(0.00742267372).epsilon(1e-6));
  // At this lambda the metric floor is the binding constraint.
  CHECK(cap.eps() == doctest::Approx(0.9 * cap.eps_lambda()).epsilon(1e-13));
  CHECK(cap.descent_rate() == doctest::Approx(2.0 / cap.eps()).epsilon(1e-13));

  const auto loose = build_cap(G, 1.0, 0.5);
  CHECK(loose.eps_lambda() == doctest::Approx(0.04875106218).epsilon(1e-6));
  CHECK(loose.eps() == doctest::Approx(0.9 * loose.eps_lambda())
                           .epsilon(1e-13));
}

TEST_CASE("reparametrizations are exact past the transition") {
  const auto cap = build_cap(reference_graph(), 1.0, 0.9);
  const double e = cap.eps();
  CHECK(cap.alpha(e) == e);
  CHECK(cap.alpha_prime(e) == 1.0);
  CHECK(cap.alpha_c(-e) == -e);
  CHECK(cap.alpha_c_prime(-e) == 1.0);
}

TEST_CASE("root zone tracks the prescribed descent") {
  const auto cap = build_cap(reference_graph(), 1.0, 0.9);
  const double C = cap.descent_rate();
  // In the root zone the offset is the preimage of the height line, so
  // pushing it back through the height evaluator recovers C*t.
  double worst = 0.0;
  for (double t = 0.7 * cap.xi(); t > 1e-12; t *= 0.5) {
    const auto p = cap.phi(t);
    CHECK(p.height == C * t);
    const double residual = std::fabs(cap.f_hat(p.offset) - C * t);
    worst = std::max(worst, residual);
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("cap blending function") {
  const auto cap = build_cap(reference_graph(), 1.0, 0.9);
  const double es = cap.eps_star();
  CHECK(cap.chi(0.0) == 0.0);
  CHECK(cap.chi(-0.5 * es) == -1.0);
  CHECK(cap.chi(-es) == -1.0);
  CHECK(std::isinf(cap.chi_prime(0.0)));
  // Monotone non-increasing on the way down.
  double prev = cap.chi(-1e-6);
  for (double a = -0.05 * es; a > -0.6 * es; a -= 0.05 * es) {
    const double cur = cap.chi(a);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
}

TEST_CASE("cylinder section of the profile curve") {
  const auto cap = build_cap(reference_graph(), 1.0, 0.9);
  const double e = cap.eps();
  const auto p = cap.phi(-0.25 * e);
  CHECK(p.offset == 0.0);
  CHECK(p.height == doctest::Approx(-cap.descent_rate() * 0.25 * e)
                        .epsilon(1e-14));

  // On the cylinder both metric factors are exact.
  const double r_plus = cap.r_plus();
  const double T = std::cosh(r_plus) * std::cosh(r_plus) *
                   cap.descent_rate() * cap.descent_rate();
  CHECK(metric_ratio(cap, -0.25 * e, 0.0) == doctest::Approx(T)
                                                 .epsilon(1e-14));
}

TEST_CASE("profile curve is continuous at the corners") {
  const auto cap = build_cap(reference_graph(), 1.0, 0.9);
  const double e = cap.eps();
  const double C = cap.descent_rate();
  const double s = 1e-9 * e;

  // Exact values where the zones meet.
  const auto origin = cap.phi(0.0);
  CHECK(origin.offset == 0.0);
  CHECK(origin.height == 0.0);
  const auto junction = cap.phi(-0.5 * e);
  CHECK(junction.offset == 0.0);
  CHECK(junction.height == doctest::Approx(-C * 0.5 * e).epsilon(1e-14));

  // Approaching from either side the curve moves at rate <= C.
  const auto above = cap.phi(s);
  const auto below = cap.phi(-s);
  CHECK(std::fabs(above.height - below.height) <= 10.0 * C * s);
  CHECK(std::fabs(above.offset) <= 10.0 * s);

  const auto cyl_end = cap.phi(-0.5 * e + s);
  const auto cap_start = cap.phi(-0.5 * e - s);
  CHECK(std::fabs(cyl_end.height - cap_start.height) <= 10.0 * C * s);
  CHECK(std::fabs(cap_start.offset) <= 10.0 * s);
}

TEST_CASE("metric stays above the floor") {
  const auto cap = build_cap(reference_graph(), 1.0, 0.9);
  const auto check = verify_metric_lower_bound(cap, 2000);
  CHECK(check.pass);
  CHECK(check.min_ratio >= 0.9 - 1e-8);
  CHECK(check.samples >= 2000);

  // Deterministic: repeated sweeps agree bit-for-bit.
  const auto again = verify_metric_lower_bound(cap, 2000);
  CHECK(check.min_ratio == again.min_ratio);
  CHECK(check.worst_t == again.worst_t);

  CHECK_THROWS_AS(verify_metric_lower_bound(cap, 50), domain_error);
}

TEST_CASE("metric floor holds across lambda values") {
  const auto G = reference_graph();
  for (double lam : {0.5, 0.99}) {
    const auto cap = build_cap(G, 1.0, lam);
    const auto check = verify_metric_lower_bound(cap, 1000);
    CHECK(check.pass);
    CHECK(check.min_ratio >= lam - 1e-8);
  }
}

TEST_CASE("corner smoothing flattens one-sided derivatives") {
  const auto cap = build_cap(reference_graph(), 1.0, 0.9);
  const auto cc = corner_smoothness(cap);
  CHECK(cc.pass);
  CHECK(cc.rho_err_origin <= cc.tol);
  CHECK(cc.s_err_origin <= cc.tol);
  CHECK(cc.rho_err_junction <= cc.tol);
  CHECK(cc.s_err_junction <= cc.tol);
}

TEST_CASE("construction guards") {
  const auto flat = ads_schwarzschild(3, 0.0);
  CHECK_THROWS_AS(build_cap(flat, 1.0, 0.9), domain_error);

  const auto G = reference_graph();
  CHECK_THROWS_AS(build_cap(G, 0.0, 0.9), domain_error);
  CHECK_THROWS_AS(build_cap(G, -1.0, 0.9), domain_error);
  CHECK_THROWS_AS(build_cap(G, 1.0, 0.0), domain_error);
  CHECK_THROWS_AS(build_cap(G, 1.0, 1.0), domain_error);

  // A vanishing cap depth squeezes the collar below the resolvable width.
  try {
    build_cap(G, 1e-10, 0.999);
    CHECK_MESSAGE(false, "expected cap_build_error");
  } catch (const cap_build_error& err) {
    CHECK(std::string(err.what()).find("cap depth (2L)") !=
          std::string::npos);
  }
}

TEST_CASE("cap bounds come out finite and honest") {
  const auto G = reference_graph();
  const auto cap = build_cap(G, 1.0, 0.9);
  const auto cb = cap_bounds(G, cap);

  // Diameter bound closed form at the collar radius.
  const double ch = std::cosh(0.5 * G.rho0);
  const double expect_diam = 2.0 * ch * 1.0 + 0.5 + ch + G.rho0;
  CHECK(cb.diam_bound == doctest::Approx(expect_diam).epsilon(1e-12));
  CHECK(cb.diam_bound == doctest::Approx(5.67382).epsilon(1e-4));

  const double rp = G.profile.rho_plus();
  const double expect_vol =
      (1.0 * ch + 0.5 + 2.0 * ch) * omega(3) * rp * rp;
  CHECK(cb.vol_bound == doctest::Approx(expect_vol).epsilon(1e-12));

  CHECK(cb.diam_ok);
  CHECK(cb.vol_ok);
  CHECK(cb.measured_diam > 4.0);
  CHECK(cb.measured_diam < 5.0);
  CHECK(cb.measured_vol > 12.0);
  CHECK(cb.measured_vol < 18.0);
  CHECK_FALSE(cb.premise_flag);
}

TEST_CASE("cap bounds at a unit collar radius") {
  const auto G = make_graph(RadialProfile::ads_schwarzschild(3, 0.5), 1.0,
                            2.4);
  const auto cap = build_cap(G, 1.0, 0.9);
  const auto cb = cap_bounds(G, cap);
  CHECK(cb.diam_bound == doctest::Approx(4.882877895619142).epsilon(1e-12));
}
