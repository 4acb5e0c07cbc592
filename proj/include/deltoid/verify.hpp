#pragma once

// Registry of the library's numeric invariants.  Each check reports its
// worst residual against a pinned tolerance; the command-line `verify`
// subcommand prints one row per check.  Checks are deterministic functions
// of (seed, samples) and run in registry order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deltoid {

struct CheckResult {
  std::string name;
  double max_residual;
  double tolerance;
  bool pass;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  // Base count for randomized checks; 1000 reproduces the nominal suite.
  int samples = 1000;
  // When set, replaces every check's tolerance (used by the self-test that
  // injects 0 to confirm failures are reported, not swallowed).
  std::optional<double> tolerance_override;
};

std::size_t registered_check_count();
std::vector<std::string> registered_check_names();

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace deltoid
