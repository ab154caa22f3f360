#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grw {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

// Property suites at default sizes: decomposition dimension audits, the
// cyclic multiplicity identity, the ord_l(q^2) halving rule, order-divides-
// totient, FC4 vs cyclic agreement, and GL(2, q) order vs brute-force
// matrix counting.
SelftestReport run_selftest(std::uint64_t seed = 0xC0FFEE);

}  // namespace grw
