#pragma once

// Inner-loop kernels with a scalar reference implementation and an AVX2/FMA
// variant chosen at startup. The scalar path defines the expected results;
// the vector path is checked against it in tests/test_kernels.cpp.

#include <complex>
#include <cstddef>

namespace nbx::kernels {

enum class Level { scalar, avx2 };

bool supported(Level level);
Level active_level();
const char* level_name(Level level);

/// Override the detected level (tests, benchmarks, NBX_KERNELS=scalar).
/// Throws std::runtime_error when the CPU lacks the requested level.
void set_level(Level level);

/// sum_k a[k] * b[k]
double dot(const double* a, const double* b, std::size_t n);

/// sum_k a[k] * b[k] * w[k]
double weighted_dot(const double* a, const double* b, const double* w, std::size_t n);

/// sum_k conj(a[k]) * b[k]
std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n);

/// y = A x, A real row-major rows x cols, x and y complex.
void real_matvec(const double* a, std::size_t rows, std::size_t cols,
                 const std::complex<double>* x, std::complex<double>* y);

/// y = A x, A complex row-major rows x cols.
void complex_matvec(const std::complex<double>* a, std::size_t rows, std::size_t cols,
                    const std::complex<double>* x, std::complex<double>* y);

// Per-level entry points, exposed for equivalence tests.
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double weighted_dot(const double* a, const double* b, const double* w, std::size_t n);
std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n);
void real_matvec(const double* a, std::size_t rows, std::size_t cols,
                 const std::complex<double>* x, std::complex<double>* y);
void complex_matvec(const std::complex<double>* a, std::size_t rows, std::size_t cols,
                    const std::complex<double>* x, std::complex<double>* y);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double weighted_dot(const double* a, const double* b, const double* w, std::size_t n);
std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n);
void real_matvec(const double* a, std::size_t rows, std::size_t cols,
                 const std::complex<double>* x, std::complex<double>* y);
void complex_matvec(const std::complex<double>* a, std::size_t rows, std::size_t cols,
                    const std::complex<double>* x, std::complex<double>* y);
}  // namespace avx2

}  // namespace nbx::kernels
