#pragma once

#include "nbx/half_int.hpp"
#include "nbx/matrix.hpp"

namespace nbx::su2 {

enum class Direction { raise, lower };
enum class Operator { Jz, Jplus, Jminus, Jx, Jy };

/// sqrt(j(j+1) - m(m +/- 1)); zero when m +/- 1 leaves [-j, j].
/// Throws std::domain_error when m is not a valid projection of j.
double ladder_coeff(HalfInt j, HalfInt m, Direction direction);

/// Matrix of the requested operator in the ascending-m Dicke basis.
ComplexMatrix operator_matrix(HalfInt j, Operator kind);

/// Real off-diagonal band of Jx: entry k couples m_k and m_{k+1}.
std::vector<double> jx_band(HalfInt j);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace nbx::su2
