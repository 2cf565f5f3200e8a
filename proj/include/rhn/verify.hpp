#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rhn {

struct PropertyResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  /// First failing (n, m), when any.
  std::optional<std::pair<int, int>> counterexample;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  bool passed() const;
};

/// Runs the harmonic invariant suite over 1 <= n <= n_max, 0 <= m <= m_max:
/// three-way strategy agreement, recurrence consistency, the m = 1 classical
/// harmonic check, denominator divisibility by lcm(1..n)^m, monotonicity in
/// n and m, and the lower bound H >= 1. Stops at the first counterexample;
/// properties not reached are reported with zero checks.
VerifyReport verify_properties(int n_max, int m_max);

}  // namespace rhn
