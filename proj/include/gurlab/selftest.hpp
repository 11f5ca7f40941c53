#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gurlab/qmat.hpp"

namespace gur {

struct SelftestOptions {
  std::uint64_t seed = 20240817;
  int n = 1000;
  double tol = tol::report;
  /// Fault injection for the negative control: -0.5 flips the sign of the
  /// Z11 coefficient inside the cumulant assemblies, which the
  /// finite-difference oracle must catch. Production value is 0.5.
  double z11_coeff = 0.5;
};

struct SuiteResult {
  std::string name;
  int run = 0;
  int passed = 0;
  std::string counterexample; // replayable problem file, first failure only
  bool ok() const { return passed == run; }
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool ok = true;
};

/// Runs the random-instance invariant suites: gur_full nonnegativity, the
/// first-order identity, the BCH residual scaling order, and the
/// finite-difference Taylor-coefficient oracle for K^(2)/K^(3).
SelftestReport run_selftest(const SelftestOptions& options,
                            std::ostream* log = nullptr);

/// Degree-2 and degree-3 coefficients of eps -> log<e^{eps sX} e^{eps tY}>
/// at eps = 0, extracted by central finite differences (step 1e-3) with one
/// Richardson refinement. Independent of the cumulant assemblies it checks.
std::pair<Complex, Complex> taylor_k2_k3_fd(const State& state, const Observable& x,
                                            const Observable& y, Complex s,
                                            Complex t);

} // namespace gur
