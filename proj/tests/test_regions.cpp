#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "ahgm/errors.hpp"
#include "ahgm/hyperbolic.hpp"
#include "ahgm/regions.hpp"

using namespace ahgm;

TEST_CASE("region volume against reference values") {
  CHECK(omega_volume(ads_schwarzschild(3, 0.5), 2.0) ==
        doctest::Approx(77.96924887187736).epsilon(1e-10));
  CHECK(omega_volume(ads_schwarzschild(3, 0.1), 2.0) ==
        doctest::Approx(74.22360612552588).epsilon(1e-10));

  // The zero slice fills the whole ball.
  CHECK(omega_volume(ads_schwarzschild(3, 0.0), 2.0) ==
        doctest::Approx(ball_volume(3, 2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(omega_volume(ads_schwarzschild(3, 0.5), 0.3), domain_error);
}

TEST_CASE("volume splits are consistent") {
  const auto G = ads_schwarzschild(3, 0.5);
  const double h0 = 0.5594958461400177;
  const auto split = omega_volume_split(G, 2.0, h0);
  CHECK(split.below + split.above ==
        doctest::Approx(split.total).epsilon(1e-12));
  CHECK(split.total == doctest::Approx(omega_volume(G, 2.0)).epsilon(1e-10));
  CHECK(split.below > 0.0);
  CHECK(split.above > 0.0);

  const auto all_above = omega_volume_split(G, 2.0, 0.0);
  CHECK(all_above.below == 0.0);
  const auto all_below = omega_volume_split(G, 2.0, G.profile.sup_f());
  CHECK(all_below.above == 0.0);
}

TEST_CASE("coarea upper bound dominates the true volume") {
  const auto G = ads_schwarzschild(3, 0.5);
  const double h0 = 0.5594958461400177;
  const auto up = coarea_volume_upper(G, 2.0, h0);
  const double rp_geo = std::asinh(G.profile.rho_plus());
  CHECK(up.annulus_ball ==
        doctest::Approx(ball_volume(3, 2.0) - ball_volume(3, rp_geo))
            .epsilon(1e-12));
  CHECK(up.upper >= omega_volume(G, 2.0));
  CHECK(up.upper == doctest::Approx(up.annulus_ball + up.below + up.above)
                        .epsilon(1e-12));
}

TEST_CASE("volume bounds hypothesis checks") {
  const auto G = ads_schwarzschild(3, 0.5);
  CHECK_THROWS_AS(volume_bounds(G, 1.0, 2.0, 2.0, 10.0), out_of_hypothesis);
  CHECK_THROWS_AS(volume_bounds(G, -0.1, 2.0, 2.0, 10.0), domain_error);
  CHECK_THROWS_AS(volume_bounds(G, 0.5, 1.0, 2.0, 10.0), domain_error);

  const auto vb = volume_bounds(G, 0.5, 2.0, 2.0, 10.0);
  CHECK(vb.lower > 0.0);
  CHECK(vb.upper > vb.lower);
  CHECK(vb.unit_scale_constant > 0.0);
}

TEST_CASE("diameter bound closed form") {
  // depth 1, no slope, collar radius 1, outer radius 2:
  // 2*1 + 2*(2-1)*1 + pi*sinh(1)*1.
  CHECK(diameter_bound(1.0, 0.0, 1.0, 2.0) ==
        doctest::Approx(4.0 + kPi * std::sinh(1.0)).epsilon(1e-14));
  CHECK(diameter_bound(1.0, 0.0, 0.0, 1.0) ==
        doctest::Approx(kPi * std::sinh(1.0)).epsilon(1e-14));
  const double lip = std::sqrt(2.0);
  CHECK(diameter_bound(1.0, 1.0, 1.0, 2.0) ==
        doctest::Approx(2.0 + (2.0 + kPi * std::sinh(1.0)) * lip)
            .epsilon(1e-14));

  CHECK_THROWS_AS(diameter_bound(2.0, 0.0, 1.0, 1.0), domain_error);
  CHECK_THROWS_AS(diameter_bound(-1.0, 0.0, 1.0, 2.0), domain_error);

  const auto G = ads_schwarzschild(3, 0.5);
  CHECK(diameter_bound(G, 2.0) ==
        doctest::Approx(diameter_bound(G.rho0, G.gamma, G.depth_D, 2.0))
            .epsilon(1e-14));
}

TEST_CASE("annulus stretch constant") {
  CHECK(annulus_lipschitz(1.0, 2.0, 0.0) ==
        doctest::Approx(7.5960786752585836).epsilon(1e-12));
  CHECK(annulus_lipschitz(1.0, 2.0, 1.0) ==
        doctest::Approx(10.742477483403742).epsilon(1e-12));
  CHECK_THROWS_AS(annulus_lipschitz(2.0, 1.0, 0.0), domain_error);
  CHECK_THROWS_AS(annulus_lipschitz(0.0, 1.0, 0.0), domain_error);
}

TEST_CASE("boundary area bound") {
  const auto G = ads_schwarzschild(3, 0.5);
  const auto cmp = boundary_area_bound(G, 0.5, 2.0);
  const double rp = G.profile.rho_plus();
  // Both boundary spheres of the truncated region count: the inner one at
  // the boundary radius and the outer cut at geodesic radius 2.
  CHECK(cmp.measured == doctest::Approx(omega(3) * rp * rp +
                                        sphere_area(3, 2.0))
                            .epsilon(1e-13));
  CHECK(cmp.slack == doctest::Approx(cmp.bound - cmp.measured).epsilon(1e-12));
  CHECK(cmp.slack >= 0.0);
}

TEST_CASE("flat distance parts at the reference point") {
  const auto G = ads_schwarzschild(3, 0.5);
  const double h0 = 0.5594958461400177;
  const auto parts = flat_distance_parts(G, h0, 3.0);
  CHECK(parts.rho_x == doctest::Approx(2.9826786432799226).epsilon(1e-9));
  CHECK(parts.slab == doctest::Approx(9.085596972692704).epsilon(1e-9));
  CHECK(parts.disk == doctest::Approx(1.1806262712434039).epsilon(1e-9));
  CHECK(parts.wall == doctest::Approx(3.9627468853580366).epsilon(1e-9));
  CHECK(parts.band == doctest::Approx(36.40045016139935).epsilon(1e-9));
  CHECK(parts.band_lower == 0.0);
  CHECK(parts.total ==
        doctest::Approx(50.62942029069349).epsilon(1e-9));
  CHECK(parts.total == doctest::Approx(parts.slab + parts.disk + parts.wall +
                                       parts.band + parts.band_lower)
                           .epsilon(1e-12));
  CHECK(flat_distance_bound(G, h0, 3.0) ==
        doctest::Approx(parts.total).epsilon(1e-14));
}

TEST_CASE("flat distance vanishes for the zero slice") {
  const auto G = ads_schwarzschild(3, 0.0);
  const auto parts = flat_distance_parts(G, 0.0, 3.0);
  CHECK(parts.total == 0.0);
}

TEST_CASE("flat distance guards") {
  const auto G = ads_schwarzschild(3, 0.5);
  const double h0 = 0.5594958461400177;
  // At rho_bar = 1 the rim height sits below the cut level.
  CHECK_THROWS_AS(flat_distance_parts(G, h0, 1.0), domain_error);
  CHECK_THROWS_AS(flat_distance_parts(G, -0.1, 3.0), domain_error);
  CHECK_THROWS_AS(flat_distance_parts(G, 1.0, 3.0), domain_error);
}

TEST_CASE("flat distance with a cut below the rim floor") {
  // A steep tabulated profile whose rim never drops below the cut level
  // exercises the lower band term.
  std::vector<double> rho = {0.5, 0.6, 0.8, 1.0, 1.5};
  std::vector<double> f = {0.0, 1.2, 1.8, 2.2, 2.4};
  const auto G = make_graph(RadialProfile::from_table(3, rho, f), 1.0, 2.0);
  const auto parts = flat_distance_parts(G, 1.5, 1.4);
  CHECK(parts.band_lower > 0.0);
  CHECK(parts.rho_x > 0.5);
  CHECK(parts.rho_x < 1.4);
  CHECK(parts.total == doctest::Approx(parts.slab + parts.disk + parts.wall +
                                       parts.band + parts.band_lower)
                           .epsilon(1e-12));
}
