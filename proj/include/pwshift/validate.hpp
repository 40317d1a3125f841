#pragma once

#include <string>
#include <vector>

#include "pwshift/pvquad.hpp"

namespace pwshift {

struct ValidationResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Built-in validation suite: reference phase-shift table for the bundled
/// proton-He4 scenario, the cubic error-scaling law for the exactly solvable
/// well, delta-sequence convergence, and oracle-equivalence spot checks.
std::vector<ValidationResult> run_validation(const QuadratureSpec& spec);

}  // namespace pwshift
