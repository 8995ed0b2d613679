#pragma once

#include <stdexcept>
#include <string>

namespace ahgm {

// Invalid user-supplied configuration (family spec, CLI flags, table files).
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Arguments outside a routine's mathematical domain (rho at or inside the
// horizon, beta <= 1, negative mass, ...).
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical procedure failed to reach its tolerance (quadrature
// non-convergence, root residual too large, finite-difference underflow).
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested quantity exists but the estimate's hypotheses exclude the input
// (e.g. the small-mass volume bound invoked with mass >= 1).
class out_of_hypothesis : public std::runtime_error {
public:
  explicit out_of_hypothesis(const std::string& what) : std::runtime_error(what) {}
};

// The constructive boundary cap could not be built: a collar inequality has
// no admissible width.  The message names the violated inequality.
class cap_build_error : public std::runtime_error {
public:
  explicit cap_build_error(const std::string& what) : std::runtime_error(what) {}
};

// File / stream failures.
class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ahgm
