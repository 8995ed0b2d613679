#pragma once

#include <string>
#include <vector>

namespace ahgm {

// One acceptance criterion outcome.  detail is deterministic (no timing, no
// addresses) so reruns can be compared byte for byte; seconds is reported
// separately.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

// Runs a named suite and returns one result per criterion:
//   core    -> {8}
//   mass    -> {1, 2}
//   levels  -> {3, 4}
//   regions -> {5, 6}
//   cap     -> {7}
//   all     -> {1..9} (9 reruns 1-8 and compares, so it costs a second pass)
// Unknown suite names throw config_error.
std::vector<CriterionResult> run_suite(const std::string& suite);

// One aligned "PASS/FAIL  id  name  time  detail" line per result.
std::string format_results(const std::vector<CriterionResult>& results);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace ahgm
