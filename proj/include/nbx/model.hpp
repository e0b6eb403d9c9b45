#pragma once

// Hamiltonian family H^n = U^dagger (sum_i A_i Jz^i) U and the forms derived
// from it: the J+/J- expansion of the 2-model as printed, and its two-mode
// (Schwinger boson) version. The rotated-diagonal form is the reference;
// the printed forms are built verbatim and compared against it.

#include "nbx/half_int.hpp"
#include "nbx/matrix.hpp"
#include "nbx/rotation.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nbx {

struct ModelParams {
  int n = 1;                  // highest power of Jz
  std::vector<double> A;      // A_0 .. A_n
  RotationAngles angles;

  /// Validates n >= 1, A.size() == n + 1 and finiteness; throws
  /// std::invalid_argument otherwise.
  static ModelParams make(int n, std::vector<double> A, double theta, double phi);
  /// n taken from the coefficient count.
  static ModelParams make(std::vector<double> A, double theta, double phi);

  double coeff(int i) const { return i <= n ? A[static_cast<std::size_t>(i)] : 0.0; }

  /// E_m = sum_i A_i m^i.
  double energy(HalfInt m) const;
};

ComplexMatrix diagonal_hamiltonian(const ModelParams& params, HalfInt j);

/// Dense U^dagger H0 U.
ComplexMatrix model_hamiltonian(const ModelParams& params, HalfInt j);

/// H v via U, diag(E), U^dagger; never forms H. O(dim^2).
StateVector apply_hamiltonian(const ModelParams& params, HalfInt j, std::span<const cplx> v);

/// H v via the tridiagonal K = U^dagger Jz U = cos(theta) Jz + sin(theta) Jx,
/// using H = sum_i A_i K^i. O(n dim); independent of the little-d route.
StateVector apply_hamiltonian_banded(const ModelParams& params, HalfInt j,
                                     std::span<const cplx> v);

struct RotatedJzExpansion {
  cplx jz;
  cplx jplus;
  cplx jminus;
  double residual = 0.0;  // max-abs entry of U^dagger Jz U minus the fit
};

/// Projection of U^dagger Jz U onto span{Jz, J+, J-} (Frobenius-orthogonal).
RotatedJzExpansion expand_rotated_jz(HalfInt j, const RotationAngles& angles);

struct LiteralH2 {
  ComplexMatrix matrix;
  double max_abs_difference = 0.0;  // against model_hamiltonian
};

/// The 2-model written in J+/J- exactly as printed, including
/// sin(theta)(e^{i phi} J+ + e^{-i phi} J-) without factors of 1/2 and with
/// no A_0 term. Requires n == 2.
LiteralH2 paper_literal_h2(const ModelParams& params, HalfInt j);

struct TwoModeCoefficients {
  double A0_const = 0.0;     // A2 (cos^2 N^2 + sin^2 N)
  double delta_omega = 0.0;  // A1 cos
  double lambda = 0.0;       // A1 sin
  double U_collision = 0.0;  // A2 (1 - 3 cos^2)
  double mu = 0.0;           // 2 A2 cos sin
  double Lambda_cap = 0.0;   // A2 sin^2
  double phi = 0.0;          // laser phase carried into the two-mode terms
};

/// Requires n == 2; N_total is the particle number (N = 2j).
TwoModeCoefficients two_mode_coefficients(const ModelParams& params, int N_total);

struct FockSector {
  int N_total = 0;  // basis |n_a, n_b>, n_a + n_b = N_total, ascending n_a
  std::size_t dim() const { return static_cast<std::size_t>(N_total) + 1; }
  HalfInt spin() const { return HalfInt{N_total}; }
};

/// standard: Jz = (a^dagger a - b^dagger b)/2; paper_literal: Jz = a^dagger a - b^dagger b.
enum class SchwingerConvention { standard, paper_literal };

SchwingerConvention parse_convention(std::string_view text);
std::string_view to_string(SchwingerConvention c);

/// The two-mode Hamiltonian on a fixed-N sector. The convention only changes
/// the Jz that multiplies delta_omega; every other term is built from the
/// bosonic operators as printed, including the mu term
/// (a^dagger a^dagger a b - b^dagger a^dagger a b) e^{i phi} + h.c.
ComplexMatrix fock_hamiltonian(const TwoModeCoefficients& coeffs, const FockSector& sector,
                               SchwingerConvention convention);

struct RateRelation {
  double lhs = 0.0;  // (mu + Lambda) / U
  double rhs = 0.0;  // (lambda/2)(lambda + 2 delta_omega)/(A1^2 - 3 delta_omega^2)
};

/// Both sides of the printed elastic/inelastic rate relation. Equality is not
/// assumed. Throws std::domain_error naming the vanishing denominator.
RateRelation rate_relation(const ModelParams& params);

}  // namespace nbx
