#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace marc {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst deviation seen
  double tolerance = 0.0;
};

/// Cross-checks between independent routes: Jacobi vs closed-form spectrum,
/// RK4 vs spectral propagation, Wootters vs 2|E|, closed-form vs pipeline
/// concurrence, formula peak times vs grid argmax, optimum search, and the
/// zero-entanglement property of the effective Hamiltonian. Deterministic
/// for a given seed.
std::vector<CheckResult> run_selftest(std::uint64_t seed = 7);

}  // namespace marc
