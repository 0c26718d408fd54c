#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyplobe::cli {

struct VerifyOptions {
  int samples = 200;
  std::uint64_t seed = 42;
  // Negative control: report -tau instead of tau in the area-equivalence check.
  bool flip_tau_sign = false;
};

struct PropertyOutcome {
  std::string name;
  bool pass = false;
  int cases = 0;
  std::string detail;
};

/// Runs every property check; outcomes are sorted by property name.
std::vector<PropertyOutcome> run_verification(const VerifyOptions& options);

}  // namespace hyplobe::cli
