#pragma once

// The conjugating rotation U = exp(i phi Jz) exp(i theta Jy) of the model
// family, and the little-d matrix exp(i theta Jy).
//
// Sign convention: the exponent is +i theta Jy. The textbook Wigner matrix
// uses exp(-i beta Jy), so d_here(theta) = d_textbook(-theta).
//
// exp(i theta Jy) is evaluated through the eigenbasis of Jx. With
// D = diag((-i)^k), Jy = D Jx D^dagger, and Jx = V diag(m) V^T for a real
// orthogonal V obtained from the tridiagonal eigensolver, so
//   exp(i theta Jy) = D V diag(exp(i theta m)) V^T D^dagger,
// which is real and costs O(dim^2) per column once V is known.

#include "nbx/half_int.hpp"
#include "nbx/matrix.hpp"

#include <memory>
#include <span>

namespace nbx {

/// theta and phi reduced to [0, 2 pi); the raw inputs are kept alongside.
/// For half-integer j, exp(2 pi i Jy) = -1, so a reduced theta can flip the
/// global sign of U. Conjugated operators and populations are unaffected.
struct RotationAngles {
  double theta = 0.0;
  double phi = 0.0;
  double theta_input = 0.0;
  double phi_input = 0.0;

  /// Throws std::invalid_argument on non-finite input.
  static RotationAngles make(double theta, double phi);
  bool canonicalized() const { return theta != theta_input || phi != phi_input; }
};

/// Real orthogonal eigenvectors of Jx for spin j: column k of `vectors` has
/// eigenvalue m_k = -j + k.
struct JxEigenbasis {
  HalfInt j;
  RealMatrix vectors;
  RealMatrix vectors_t;
  /// max_k |lambda_k - m_k| of the numerical eigenvalues.
  double eigenvalue_error = 0.0;
};

/// Computed once per j and cached; safe to call from several threads.
std::shared_ptr<const JxEigenbasis> jx_eigenbasis(HalfInt j);

/// exp(i theta Jy) in the ascending-m Dicke basis (real, orthogonal).
RealMatrix little_d(HalfInt j, double theta);

/// Column m of little_d(j, theta), O(dim^2).
std::vector<double> little_d_column(HalfInt j, double theta, HalfInt m);

/// exp(i theta Jy) v without forming the matrix.
StateVector apply_little_d(HalfInt j, double theta, std::span<const cplx> v);

/// U = diag(exp(i phi m)) little_d(j, theta).
ComplexMatrix rotation_matrix(HalfInt j, const RotationAngles& angles);

/// U v and U^dagger v, matrix-free.
StateVector apply_rotation(HalfInt j, const RotationAngles& angles, std::span<const cplx> v);
StateVector apply_rotation_adjoint(HalfInt j, const RotationAngles& angles,
                                   std::span<const cplx> v);

/// U^dagger |j, m>.
StateVector rotated_basis_state(HalfInt j, const RotationAngles& angles, HalfInt m);

/// U^dagger O U.
ComplexMatrix rotate_operator(const ComplexMatrix& u, const ComplexMatrix& o);

}  // namespace nbx
