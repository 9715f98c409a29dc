#pragma once

// Self-check suite behind `tcotto verify`: the analytic identities of the
// model and the Otto cycle, evaluated on reduced random samples.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tcotto {

enum class CheckStatus { Pass, Fail, Info };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail; // witness parameters on failure
};

struct VerifyOptions {
  unsigned samples = 1000;
  std::uint64_t seed = 12345;
  // Test hook: evaluate the closed-form state with the a^2 + b^2 numerator
  // on the |eg>,|ge> diagonal, which breaks unit trace.
  bool inject_rho33_regression = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  // One "PASS|FAIL|INFO  name  detail" line per check.
  void print(std::ostream &out) const;
};

VerifyReport run_verify(const VerifyOptions &opts = {});

} // namespace tcotto
