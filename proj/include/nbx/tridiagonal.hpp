#pragma once

#include <span>
#include <vector>

namespace nbx::tridiagonal {

/// Eigenvalues of the real symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal (off[k] couples k and k+1), ascending.
/// Implicit QL with Wilkinson shifts; O(n^2).
std::vector<double> eigenvalues(std::span<const double> diag, std::span<const double> off);

/// Unit eigenvector for an (approximate) eigenvalue by inverse iteration with
/// a pivoted LU of T - lambda I. The sign is fixed so the largest-magnitude
/// component is positive.
std::vector<double> eigenvector(std::span<const double> diag, std::span<const double> off,
                                double lambda, int iterations = 3);

}  // namespace nbx::tridiagonal
