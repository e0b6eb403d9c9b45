#pragma once

// Oracle suite behind the verify command. REQUIRED checks gate the exit
// code; DIAGNOSTIC entries report measured convention factors between the
// printed forms (H2 expansion, two-mode form, rate relation, <jz> series)
// and the rotated-diagonal ground truth.

#include "nbx/half_int.hpp"
#include "nbx/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nbx {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // worst measured error
  double tolerance = 0.0;
  std::string detail;
};

struct RatioSweep {
  std::string name;
  std::string description;
  std::vector<double> thetas;
  std::vector<double> ratios;
  double mean = 0.0;
  double cv = 0.0;  // stddev / |mean|
};

struct Diagnostic {
  std::string name;
  double value = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240607;
  int max_twice_j = 20;  // oracle scale, j <= 10
  int draws = 200;
  SchwingerConvention convention = SchwingerConvention::standard;
  bool inject_fault = false;  // flips a sign in the spectrum oracle fixture
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<RatioSweep> sweeps;
  std::vector<Diagnostic> diagnostics;
  bool passed() const;
};

inline constexpr double ratio_cv_limit = 1e-6;

/// theta_k = 0.1 + 0.07 k, k = 0..19.
std::vector<double> default_theta_sweep();

/// The six convention ratios, each evaluated at phi = 0 over the sweep:
///   h2_linear        printed H2 / model, J+ element, A2 = 0
///   h2_quadratic     printed H2 / model, J+^2 element, A1 = 0
///   rate_relation    lhs / rhs of the printed rate relation
///   jz_series        printed <jz> series / exact oscillating part
///   schwinger_literal_spectrum  Fock spectrum / model spectrum, A2 = 0
///   schwinger_standard_hopping  Fock / model first off-diagonal, A2 = 0
std::vector<RatioSweep> convention_ratio_sweeps(const std::vector<double>& thetas);

/// Fitted lag of <Jy> behind <Jz> on the fig2 recipe parameters, in units of a
/// quarter of the Rabi period 2 pi / |A1|.
Diagnostic jy_jz_lag_diagnostic();

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace nbx
