#include "nbx/kernels.hpp"

namespace nbx::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
  return s;
}

double weighted_dot(const double* a, const double* b, const double* w, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k] * w[k];
  return s;
}

std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
  }
  return {re, im};
}

void real_matvec(const double* a, std::size_t rows, std::size_t cols,
                 const std::complex<double>* x, std::complex<double>* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = a + r * cols;
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < cols; ++k) {
      re += row[k] * x[k].real();
      im += row[k] * x[k].imag();
    }
    y[r] = {re, im};
  }
}

void complex_matvec(const std::complex<double>* a, std::size_t rows, std::size_t cols,
                    const std::complex<double>* x, std::complex<double>* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    const std::complex<double>* row = a + r * cols;
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k < cols; ++k) {
      re += row[k].real() * x[k].real() - row[k].imag() * x[k].imag();
      im += row[k].real() * x[k].imag() + row[k].imag() * x[k].real();
    }
    y[r] = {re, im};
  }
}

}  // namespace nbx::kernels::scalar
