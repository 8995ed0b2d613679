#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ahgm/errors.hpp"
#include "ahgm/hyperbolic.hpp"
#include "ahgm/quadrature.hpp"
#include "ahgm/roots.hpp"

using namespace ahgm;

TEST_CASE("quadrature integrates polynomials to machine precision") {
  const double cubic = integrate([](double x) { return x * x * x; }, 0.0, 1.0);
  CHECK(std::fabs(cubic - 0.25) < 1e-15);

  const double line = integrate([](double x) { return 3.0 * x - 1.0; }, -2.0,
                                5.0);
  CHECK(std::fabs(line - (1.5 * 25.0 - 5.0 - (1.5 * 4.0 + 2.0))) < 1e-12);
}

TEST_CASE("quadrature handles smooth transcendental integrands") {
  const double s = integrate([](double x) { return std::sin(x); }, 0.0, kPi);
  CHECK(std::fabs(s - 2.0) < 1e-12);

  // Steep but integrable: 1/sqrt(x + 1e-4) on [0, 1].
  const double steep = integrate(
      [](double x) { return 1.0 / std::sqrt(x + 1e-4); }, 0.0, 1.0);
  const double exact = 2.0 * (std::sqrt(1.0 + 1e-4) - 1e-2);
  CHECK(std::fabs(steep - exact) < 1e-9);
}

TEST_CASE("quadrature edge cases and failure") {
  CHECK(integrate([](double) { return 7.0; }, 3.0, 3.0) == 0.0);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0),
                  domain_error);

  // A jump discontinuity off the panel edges defeats panel doubling at
  // tight tolerance.
  QuadratureOptions tight;
  tight.abs_tol = 1e-14;
  tight.rel_tol = 1e-14;
  tight.max_doublings = 8;
  CHECK_THROWS_AS(integrate([](double x) { return x < 0.437 ? 0.0 : 1.0; },
                            0.0, 1.0, tight),
                  numerical_error);
}

TEST_CASE("bisect finds roots in both orientations") {
  const double root =
      bisect([](double x) { return std::cos(x); }, 0.0, 2.0, 0.0, 200);
  CHECK(std::fabs(root - 0.5 * kPi) < 1e-14);

  // Decreasing through the root.
  const double dec =
      bisect([](double x) { return 2.0 - x * x; }, 0.0, 2.0, 0.0, 200);
  CHECK(std::fabs(dec - std::sqrt(2.0)) < 1e-14);
}

TEST_CASE("bisect edge cases") {
  // Exact zero at an endpoint is returned as-is.
  CHECK(bisect([](double x) { return x; }, 0.0, 1.0, 0.0, 50) == 0.0);
  CHECK(bisect([](double x) { return x - 1.0; }, 0.0, 1.0, 0.0, 50) == 1.0);

  CHECK_THROWS_AS(
      bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 0.0, 50),
      numerical_error);
}

TEST_CASE("total solid angles") {
  CHECK(std::fabs(omega(2) - 2.0 * kPi) < 1e-14);
  CHECK(std::fabs(omega(3) - 4.0 * kPi) < 1e-13);
  CHECK(std::fabs(omega(4) - 2.0 * kPi * kPi) < 1e-13);
  CHECK_THROWS_AS(omega(1), domain_error);
}

TEST_CASE("sphere area is the closed form") {
  for (double r : {0.3, 1.0, 2.5}) {
    const double sh = std::sinh(r);
    CHECK(sphere_area(3, r) == doctest::Approx(4.0 * kPi * sh * sh)
                                   .epsilon(1e-14));
  }
  CHECK(sphere_area(4, 0.0) == 0.0);
  CHECK_THROWS_AS(sphere_area(3, -0.1), domain_error);
}

TEST_CASE("ball volume matches the n = 3 closed form") {
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double ref = kPi * (std::sinh(2.0 * r) - 2.0 * r);
    CHECK(ball_volume(3, r) == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK(ball_volume(3, 2.0) ==
        doctest::Approx(73.16743276921114).epsilon(1e-12));
}

TEST_CASE("ball volume in higher dimensions") {
  CHECK(ball_volume(4, 1.0) ==
        doctest::Approx(6.875719588241427).epsilon(1e-12));
  CHECK(ball_volume(5, 2.0) ==
        doctest::Approx(1066.048449114675).epsilon(1e-12));
  CHECK(ball_volume(5, 0.0) == 0.0);
  CHECK_THROWS_AS(ball_volume(3, -1.0), domain_error);
}

TEST_CASE("ball volume derivative is the sphere area") {
  for (int n : {3, 4, 5}) {
    for (double r : {0.5, 1.0, 2.0}) {
      const double h = 1e-5;
      const double fd = (ball_volume(n, r + h) - ball_volume(n, r - h)) /
                        (2.0 * h);
      CHECK(fd == doctest::Approx(sphere_area(n, r)).epsilon(1e-8));
    }
  }
}

TEST_CASE("lapse is cosh") {
  CHECK(lapse(0.0) == 1.0);
  CHECK(lapse(0.7) == std::cosh(0.7));
}
