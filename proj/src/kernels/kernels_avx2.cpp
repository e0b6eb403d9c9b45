// Compiled with -mavx2 -mfma; only called after a runtime CPU check.

#include "nbx/kernels.hpp"

#include <immintrin.h>

namespace nbx::kernels::avx2 {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Lanes hold interleaved (re, im, re, im); returns (l0 + l2, l1 + l3).
inline std::complex<double> pair_sum(__m256d v) {
  const __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
  return {_mm_cvtsd_f64(s), _mm_cvtsd_f64(_mm_unpackhi_pd(s, s))};
}

// Returns l0 - l1 + l2 - l3.
inline double alt_sum(__m256d v) {
  const __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
  return _mm_cvtsd_f64(s) - _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
  }
  for (; k + 4 <= n; k += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) s += a[k] * b[k];
  return s;
}

double weighted_dot(const double* a, const double* b, const double* w, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256d p0 = _mm256_mul_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
    const __m256d p1 = _mm256_mul_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4));
    acc0 = _mm256_fmadd_pd(p0, _mm256_loadu_pd(w + k), acc0);
    acc1 = _mm256_fmadd_pd(p1, _mm256_loadu_pd(w + k + 4), acc1);
  }
  for (; k + 4 <= n; k += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k));
    acc0 = _mm256_fmadd_pd(p, _mm256_loadu_pd(w + k), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) s += a[k] * b[k] * w[k];
  return s;
}

std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d same = _mm256_setzero_pd();   // (ar*br, ai*bi, ...)
  __m256d cross = _mm256_setzero_pd();  // (ar*bi, ai*br, ...)
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * k);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * k);
    same = _mm256_fmadd_pd(va, vb, same);
    cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), cross);
  }
  double re = hsum(same);
  double im = alt_sum(cross);
  for (; k < n; ++k) {
    re += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
    im += a[k].real() * b[k].imag() - a[k].imag() * b[k].real();
  }
  return {re, im};
}

void real_matvec(const double* a, std::size_t rows, std::size_t cols,
                 const std::complex<double>* x, std::complex<double>* y) {
  const double* px = reinterpret_cast<const double*>(x);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = a + r * cols;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= cols; k += 4) {
      // (a0, a0, a1, a1) and (a2, a2, a3, a3)
      const __m256d a01 = _mm256_permute4x64_pd(
          _mm256_castpd128_pd256(_mm_loadu_pd(row + k)), 0b01010000);
      const __m256d a23 = _mm256_permute4x64_pd(
          _mm256_castpd128_pd256(_mm_loadu_pd(row + k + 2)), 0b01010000);
      acc0 = _mm256_fmadd_pd(a01, _mm256_loadu_pd(px + 2 * k), acc0);
      acc1 = _mm256_fmadd_pd(a23, _mm256_loadu_pd(px + 2 * k + 4), acc1);
    }
    std::complex<double> s = pair_sum(_mm256_add_pd(acc0, acc1));
    double re = s.real(), im = s.imag();
    for (; k < cols; ++k) {
      re += row[k] * x[k].real();
      im += row[k] * x[k].imag();
    }
    y[r] = {re, im};
  }
}

void complex_matvec(const std::complex<double>* a, std::size_t rows, std::size_t cols,
                    const std::complex<double>* x, std::complex<double>* y) {
  const double* px = reinterpret_cast<const double*>(x);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = reinterpret_cast<const double*>(a + r * cols);
    __m256d same = _mm256_setzero_pd();   // (ar*xr, ai*xi, ...)
    __m256d cross = _mm256_setzero_pd();  // (ar*xi, ai*xr, ...)
    std::size_t k = 0;
    for (; k + 2 <= cols; k += 2) {
      const __m256d va = _mm256_loadu_pd(row + 2 * k);
      const __m256d vx = _mm256_loadu_pd(px + 2 * k);
      same = _mm256_fmadd_pd(va, vx, same);
      cross = _mm256_fmadd_pd(va, _mm256_permute_pd(vx, 0b0101), cross);
    }
    double re = alt_sum(same);
    double im = hsum(cross);
    for (; k < cols; ++k) {
      const std::complex<double> ar = a[r * cols + k];
      re += ar.real() * x[k].real() - ar.imag() * x[k].imag();
      im += ar.real() * x[k].imag() + ar.imag() * x[k].real();
    }
    y[r] = {re, im};
  }
}

}  // namespace nbx::kernels::avx2
