#pragma once

#include "nbx/half_int.hpp"
#include "nbx/matrix.hpp"
#include "nbx/model.hpp"

#include <vector>

namespace nbx {

struct EigenPair {
  HalfInt m;
  double energy = 0.0;
  StateVector vector;  // U^dagger |j, m>
};

enum class GroundMethod { closed_form, scan };

struct GroundStateResult {
  EigenPair pair;
  HalfInt m0;
  bool degenerate = false;
  GroundMethod method = GroundMethod::scan;
};

/// All 2j+1 closed-form eigenpairs, ascending m. No diagonalization.
std::vector<EigenPair> exact_spectrum(const ModelParams& params, HalfInt j);

EigenPair eigen_pair(const ModelParams& params, HalfInt j, HalfInt m);

/// Minimizer of E_m from the n = 2 sign rules. Throws std::invalid_argument
/// for n != 2. Equidistant grid points resolve toward lower m.
HalfInt closed_form_ground_m(const ModelParams& params, HalfInt j);

struct ScanResult {
  HalfInt m0;              // lowest m attaining the minimum
  long double energy = 0;  // E(m0) in extended precision
  int minimizers = 0;      // number of m at the minimum
};

/// Exhaustive minimum of E_m over all 2j+1 values in extended precision.
ScanResult ground_state_scan(const ModelParams& params, HalfInt j);

/// Ground state. For n = 2 the closed-form rule picks m0 and the scan
/// confirms it (std::logic_error on disagreement); other n use the scan.
/// Ties return the lower m with degenerate = true.
GroundStateResult ground_state(const ModelParams& params, HalfInt j);

/// ||H v - E v||_2 through the matrix-free apply.
double residual_norm(const ModelParams& params, HalfInt j, const EigenPair& pair);

/// Same residual through the tridiagonal form K = cos(theta) Jz + sin(theta) Jx
/// of U^dagger Jz U; O(n dim) per pair instead of O(dim^2).
double banded_residual_norm(const ModelParams& params, HalfInt j, const EigenPair& pair);

/// Residual bound scale 1 + sum_i |A_i| j^i.
double energy_scale(const ModelParams& params, HalfInt j);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
  int sweeps = 0;
};

inline constexpr std::size_t brute_force_max_dim = 201;

/// Cyclic complex Jacobi eigensolver for Hermitian matrices, used as an
/// oracle independent of the closed form. Throws std::invalid_argument for
/// non-Hermitian input or dim > brute_force_max_dim.
EigenSystem brute_diagonalize(const ComplexMatrix& h);

}  // namespace nbx
