#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypdet/numerics/ext_real.hpp"

namespace hypdet::cli {

/// Outcome of one invariant check.
struct CheckResult {
  std::string suite;
  std::string name;
  ExtReal measured;
  ExtReal tolerance;
  bool passed = false;
  std::string detail;
};

/// "elliptic", "special", "scattering", "regdet".
const std::vector<std::string>& verify_suite_names();

/// Runs one suite, or every suite for "all", at the current working
/// precision.  ValidationError for unknown names.
std::vector<CheckResult> run_verify_suite(std::string_view suite);

}  // namespace hypdet::cli
