#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "ahgm/errors.hpp"
#include "ahgm/family.hpp"

using namespace ahgm;

namespace {

FamilySpec canonical() {
  FamilySpec spec;
  spec.masses = {1.0, 0.5, 0.1, 0.02};
  spec.cap_samples = 400;
  return spec;
}

}  // namespace

TEST_CASE("family run fixes class constants from the largest member") {
  const auto rep = run_family(canonical());
  CHECK(rep.rho0 == doctest::Approx(2.2 * std::asinh(1.0)).epsilon(1e-13));
  CHECK(rep.gamma > 0.0);
  CHECK(rep.depth_D > 0.0);
  REQUIRE(rep.rows.size() == 4);
}

TEST_CASE("family rows carry the full comparison record") {
  const auto rep = run_family(canonical());
  for (const auto& row : rep.rows) {
    CAPTURE(row.mass);
    CHECK(row.mass_numeric == doctest::Approx(row.mass).epsilon(1e-3));
    CHECK(row.h0 > 0.0);
    CHECK(row.gap > 0.0);
    CHECK(row.gap_ratio > 0.0);
    CHECK(row.penrose_margin > 0.0);
    CHECK(row.vol_gap > 0.0);
    CHECK(row.vol_omega == doctest::Approx(row.vol_ball + row.vol_gap)
                               .epsilon(1e-10));
    CHECK(row.flat_bound > 0.0);
    CHECK(std::isfinite(row.flat_bound));
    CHECK(row.D0 > 0.0);
    CHECK(row.C0_slack >= 0.0);
    CHECK(row.cap_pass == "1");
    CHECK(row.cap_min_ratio >= 0.9 - 1e-8);
  }
}

TEST_CASE("zero-mass member degenerates cleanly") {
  FamilySpec spec;
  spec.masses = {0.5, 0.0};
  spec.cap_samples = 400;
  const auto rep = run_family(spec);
  REQUIRE(rep.rows.size() == 2);
  const auto& flat = rep.rows[1];
  CHECK(flat.mass == 0.0);
  CHECK(std::fabs(flat.mass_numeric) < 1e-12);
  CHECK(flat.gap == 0.0);
  CHECK(std::isnan(flat.gap_ratio));
  CHECK(flat.flat_bound == 0.0);
  CHECK(std::fabs(flat.vol_gap) < 1e-9);
  CHECK(flat.cap_pass == "na");

  const std::string csv = csv_string(rep);
  CHECK(csv.find(",nan,") != std::string::npos);
}

TEST_CASE("csv output is deterministic with a fixed header") {
  const auto spec = canonical();
  const auto a = csv_string(run_family(spec));
  const auto b = csv_string(run_family(spec));
  CHECK(a == b);

  std::istringstream lines(a);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "mass,mass_numeric,h0,gap,gap_ratio,penrose_margin,vol_omega,"
        "vol_ball,vol_gap,flat_bound,D0,C0_slack,cap_min_ratio,cap_pass");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("csv writes to disk byte-for-byte") {
  FamilySpec spec;
  spec.masses = {0.5};
  spec.cap_samples = 400;
  const auto rep = run_family(spec);
  const char* path = "./test_family_out.csv";
  emit_csv(rep, path);
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == csv_string(rep));
  std::remove(path);

  CHECK_THROWS_AS(emit_csv(rep, "/nonexistent_dir_xyz/out.csv"), io_error);
}

TEST_CASE("family spec validation") {
  const auto with = [](auto&& mutate) {
    FamilySpec spec;
    spec.masses = {0.5};
    mutate(spec);
    return spec;
  };

  CHECK_THROWS_AS(run_family(with([](FamilySpec& s) { s.masses.clear(); })),
                  config_error);
  CHECK_THROWS_AS(run_family(with([](FamilySpec& s) { s.model = "foo"; })),
                  config_error);
  CHECK_THROWS_AS(run_family(with([](FamilySpec& s) { s.masses = {-0.1}; })),
                  config_error);
  CHECK_THROWS_AS(run_family(with([](FamilySpec& s) { s.beta = 1.0; })),
                  config_error);
  CHECK_THROWS_AS(run_family(with([](FamilySpec& s) { s.lambda = 1.0; })),
                  config_error);
  CHECK_THROWS_AS(run_family(with([](FamilySpec& s) { s.cap_samples = 10; })),
                  config_error);
  CHECK_THROWS_AS(run_family(with([](FamilySpec& s) {
                    s.masses = {1.0};
                    s.rho = 1.0;
                  })),
                  config_error);
  CHECK_THROWS_AS(run_family(with([](FamilySpec& s) {
                    s.masses = {1.0};
                    s.rho_bar = 0.9;
                  })),
                  config_error);
  CHECK_THROWS_AS(run_family(with([](FamilySpec& s) { s.n = 2; })),
                  config_error);
}
