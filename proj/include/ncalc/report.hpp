#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncalc/duality.hpp"
#include "ncalc/util.hpp"

namespace ncalc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct ReportSuite {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Random elements of ker mu with small coefficients, in ambient R(x)R
// coordinates; used by the quotient fuzzing checks.
std::vector<std::vector<Vec>> random_kernel_generator_sets(const UniversalCalculus& univ,
                                                           std::size_t count, SplitMix64& rng);

// The full invariant suite for one algebra (every check that applies to an
// arbitrary valid algebra over an exact field).
ReportSuite run_report_suite(AlgebraPtr a, std::uint64_t seed);

}  // namespace ncalc
