#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ahgm/errors.hpp"
#include "ahgm/hyperbolic.hpp"
#include "ahgm/levels.hpp"

using namespace ahgm;

TEST_CASE("level radius and perimeter at a reference height") {
  const auto G = ads_schwarzschild(3, 0.5);
  CHECK(level_radius(G, 0.3) ==
        doctest::Approx(0.812479554198139).epsilon(1e-10));
  CHECK(level_set_area(G, 0.3) ==
        doctest::Approx(8.295350595662676).epsilon(1e-10));

  CHECK(level_radius(G, 0.0) == G.profile.rho_plus());

  // Round trip through the height function.
  const double h = G.profile.f(2.0);
  CHECK(level_radius(G, h) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("level area vanishes outside the height range") {
  const auto G = ads_schwarzschild(3, 0.5);
  CHECK(level_set_area(G, -0.1) == 0.0);
  CHECK(level_set_area(G, G.profile.sup_f()) == 0.0);
  CHECK(level_set_area(G, 10.0) == 0.0);
}

TEST_CASE("perimeter function saturates at the ends") {
  const auto G = ads_schwarzschild(3, 0.5);
  const double rp = G.profile.rho_plus();
  CHECK(perimeter_function(G, 0.0) ==
        doctest::Approx(omega(3) * rp * rp).epsilon(1e-13));
  CHECK(perimeter_function(G, -1.0) ==
        doctest::Approx(omega(3) * rp * rp).epsilon(1e-13));
  CHECK(std::isinf(perimeter_function(G, G.profile.sup_f())));
  CHECK(std::isinf(perimeter_function(G, 1.0)));
  // Strictly increasing in between.
  CHECK(perimeter_function(G, 0.2) < perimeter_function(G, 0.4));
}

TEST_CASE("height threshold at the reference parameters") {
  const auto G = ads_schwarzschild(3, 0.5);
  const auto rep = height_h0(G, 0.5, 2.0);
  CHECK(rep.threshold == doctest::Approx(8.0 * kPi).epsilon(1e-13));
  CHECK(rep.rho_h == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(rep.h0 == doctest::Approx(0.5594958461400177).epsilon(1e-12));
  CHECK(rep.gap == doctest::Approx(0.1263270108725299).epsilon(1e-11));
  CHECK(rep.gap_ratio ==
        doctest::Approx(0.1263270108725299 / 0.5).epsilon(1e-11));
  CHECK(rep.sup_f == G.profile.sup_f());

  const auto G01 = ads_schwarzschild(3, 0.1);
  const auto rep01 = height_h0(G01, 0.1, 2.0);
  CHECK(rep01.h0 == doctest::Approx(0.4783844251174216).epsilon(1e-12));
}

TEST_CASE("height threshold degenerates gracefully at zero mass") {
  const auto G = ads_schwarzschild(3, 0.0);
  const auto rep = height_h0(G, 0.0, 2.0);
  CHECK(rep.h0 == G.profile.sup_f());
  CHECK(rep.gap == 0.0);
  CHECK(std::isnan(rep.gap_ratio));
}

TEST_CASE("height threshold validation") {
  const auto G = ads_schwarzschild(3, 0.5);
  CHECK_THROWS_AS(height_h0(G, 0.5, 1.0), domain_error);
  CHECK_THROWS_AS(height_h0(G, 0.5, 0.5), domain_error);
  CHECK_THROWS_AS(height_h0(G, -0.1, 2.0), domain_error);
}

TEST_CASE("boundary area sits below the mass bound") {
  const auto G = ads_schwarzschild(3, 1.0);
  const auto res = penrose_check(G, 1.0);
  CHECK(res.applicable);
  CHECK(res.boundary_area == doctest::Approx(4.0 * kPi).epsilon(1e-13));
  CHECK(res.weak_margin == doctest::Approx(4.0 * kPi).epsilon(1e-13));
  CHECK(res.margin == doctest::Approx(5.205161138274292).epsilon(1e-12));
  CHECK(res.margin > 0.0);

  // Masses spanning two decades all clear the bound.
  for (double m : {0.01, 0.1, 0.5, 2.0}) {
    const auto r = penrose_check(ads_schwarzschild(3, m), m);
    CHECK(r.margin > 0.0);
    CHECK(r.weak_margin > 0.0);
  }

  const auto flat = penrose_check(ads_schwarzschild(3, 0.0), 0.0);
  CHECK_FALSE(flat.applicable);
}

TEST_CASE("isoperimetric slack of small balls") {
  CHECK(isoperimetric_check(3, 1e-3) ==
        doctest::Approx(6.2789986105324236e-6).epsilon(1e-9));
  // Slack grows with radius and stays positive.
  CHECK(isoperimetric_check(3, 0.5) > isoperimetric_check(3, 1e-3));
  CHECK(isoperimetric_check(4, 0.2) > 0.0);
}

TEST_CASE("level machinery refuses non-monotone tables") {
  std::vector<double> rho = {0.5, 0.8, 1.2, 1.6, 2.0};
  std::vector<double> f = {0.0, 0.30, 0.20, 0.35, 0.40};
  const auto G = make_graph(RadialProfile::from_table(3, rho, f), 1.0, 2.0);
  CHECK_THROWS_AS(level_radius(G, 0.25), domain_error);
}

TEST_CASE("level offset requires an interior height") {
  const auto G = ads_schwarzschild(3, 0.5);
  // Offset and radius describe the same sphere, in area radius.
  const double h = 0.3;
  const double a = level_offset(G, h);
  CHECK(G.profile.rho_plus() + a ==
        doctest::Approx(level_radius(G, h)).epsilon(1e-12));
  CHECK_THROWS_AS(level_offset(G, 0.0), domain_error);
  CHECK_THROWS_AS(level_offset(G, G.profile.sup_f()), domain_error);
}
