#pragma once

/// Seeded property-verification suites behind the `verify` CLI command.
/// Reports are deterministic: the same options produce byte-identical text.

#include <cstdint>
#include <string>
#include <vector>

namespace cusphere {

struct VerifyOptions {
  std::string suite = "all";  // group | algebra | closedform | u3 | dynamics | all
  int samples = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool exact = false;     // structural check: residual counts mismatches
  double residual = 0.0;  // max residual, or mismatch count when exact
  double bound = 0.0;
  bool pass = false;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string text() const;
};

/// Runs the selected suite. Throws std::invalid_argument for an unknown suite
/// name or samples < 1.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace cusphere
