#pragma once

// Independent reference computations used only by the tests. None of them
// call the library's rotation or eigen-solver code.

#include "nbx/half_int.hpp"
#include "nbx/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using lcplx = std::complex<long double>;

struct LMatrix {
  std::size_t n = 0;
  std::vector<lcplx> a;
  explicit LMatrix(std::size_t dim) : n(dim), a(dim * dim) {}
  lcplx& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  lcplx operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

inline LMatrix mul(const LMatrix& x, const LMatrix& y) {
  LMatrix z(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      const lcplx xik = x(i, k);
      for (std::size_t j = 0; j < x.n; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

// sqrt(j(j+1) - m(m+1)) from first principles, long double.
inline long double raise_elem(nbx::HalfInt j, nbx::HalfInt m) {
  const long double J = j.twice / 2.0L, M = m.twice / 2.0L;
  return std::sqrt(J * (J + 1) - M * (M + 1));
}

// Jy in the ascending-m basis, long double.
inline LMatrix jy(nbx::HalfInt j) {
  const std::size_t n = nbx::dimension(j);
  LMatrix y(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const long double c = raise_elem(j, nbx::projection_at(j, k));
    // Jy = (J+ - J-)/(2i); J+ has c at (k+1, k)
    y(k + 1, k) = lcplx(0, -c / 2);
    y(k, k + 1) = lcplx(0, c / 2);
  }
  return y;
}

inline LMatrix jz(nbx::HalfInt j) {
  LMatrix z(nbx::dimension(j));
  for (std::size_t k = 0; k < z.n; ++k) z(k, k) = nbx::projection_at(j, k).twice / 2.0L;
  return z;
}

// exp(X) by scaling and squaring with a Taylor core, long double.
inline LMatrix expm(LMatrix x) {
  long double norm = 0;
  for (const auto& v : x.a) norm = std::max(norm, std::abs(v));
  norm *= static_cast<long double>(x.n);
  int s = 0;
  while (norm > 0.25L) {
    norm /= 2;
    ++s;
  }
  for (auto& v : x.a) v = std::ldexp(1.0L, -s) * v;
  LMatrix result(x.n), term(x.n);
  for (std::size_t i = 0; i < x.n; ++i) result(i, i) = term(i, i) = 1;
  for (int k = 1; k < 40; ++k) {
    term = mul(term, x);
    for (auto& v : term.a) v /= static_cast<long double>(k);
    for (std::size_t i = 0; i < x.a.size(); ++i) result.a[i] += term.a[i];
  }
  for (int i = 0; i < s; ++i) result = mul(result, result);
  return result;
}

inline LMatrix scaled(const LMatrix& x, lcplx s) {
  LMatrix y = x;
  for (auto& v : y.a) v *= s;
  return y;
}

// exp(i theta Jy) by series.
inline LMatrix series_little_d(nbx::HalfInt j, long double theta) {
  return expm(scaled(jy(j), lcplx(0, theta)));
}

// exp(i phi Jz) exp(i theta Jy) by series.
inline LMatrix series_rotation(nbx::HalfInt j, long double theta, long double phi) {
  return mul(expm(scaled(jz(j), lcplx(0, phi))), series_little_d(j, theta));
}

inline double max_diff(const LMatrix& x, const nbx::ComplexMatrix& y) {
  long double d = 0;
  for (std::size_t r = 0; r < x.n; ++r)
    for (std::size_t c = 0; c < x.n; ++c)
      d = std::max(d, std::abs(x(r, c) - lcplx(y(r, c).real(), y(r, c).imag())));
  return static_cast<double>(d);
}

inline double max_diff(const LMatrix& x, const nbx::RealMatrix& y) {
  long double d = 0;
  for (std::size_t r = 0; r < x.n; ++r)
    for (std::size_t c = 0; c < x.n; ++c) d = std::max(d, std::abs(x(r, c) - lcplx(y(r, c), 0)));
  return static_cast<double>(d);
}

// sum_i A_i m^i in long double.
inline long double poly(const std::vector<double>& A, long double m) {
  long double e = 0, p = 1;
  for (double a : A) {
    e += a * p;
    p *= m;
  }
  return e;
}

// Dense Hermitian check against the adjoint, used where the library's own
// hermiticity_error would be circular.
inline double hermitian_defect(const nbx::ComplexMatrix& h) {
  double d = 0;
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (std::size_t c = 0; c < h.dim(); ++c) d = std::max(d, std::abs(h(r, c) - std::conj(h(c, r))));
  return d;
}

// Real symmetric eigenvalues by classical Jacobi on a real embedding
// [[Re, -Im], [Im, Re]] of a Hermitian matrix; each eigenvalue appears twice.
inline std::vector<double> hermitian_eigenvalues(const nbx::ComplexMatrix& h) {
  const std::size_t n = h.dim(), m = 2 * n;
  std::vector<long double> a(m * m);
  auto at = [&](std::size_t r, std::size_t c) -> long double& { return a[r * m + c]; };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      at(r, c) = at(r + n, c + n) = h(r, c).real();
      at(r + n, c) = h(r, c).imag();
      at(r, c + n) = -h(r, c).imag();
    }
  long double total = 0;
  for (long double v : a) total += v * v;
  for (int sweep = 0; sweep < 100; ++sweep) {
    long double off = 0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += at(p, q) * at(p, q);
    if (off <= 1e-36L * total) break;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        if (at(p, q) == 0) continue;
        const long double th = (at(q, q) - at(p, p)) / (2 * at(p, q));
        const long double t = (th >= 0 ? 1 : -1) / (std::abs(th) + std::sqrt(th * th + 1));
        const long double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const long double kp = at(k, p), kq = at(k, q);
          at(k, p) = c * kp - s * kq;
          at(k, q) = s * kp + c * kq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const long double pk = at(p, k), qk = at(q, k);
          at(p, k) = c * pk - s * qk;
          at(q, k) = s * pk + c * qk;
        }
      }
  }
  std::vector<double> ev;
  for (std::size_t k = 0; k < m; ++k) ev.push_back(static_cast<double>(at(k, k)));
  std::sort(ev.begin(), ev.end());
  std::vector<double> out;
  for (std::size_t k = 0; k < m; k += 2) out.push_back(0.5 * (ev[k] + ev[k + 1]));
  return out;
}

inline nbx::StateVector random_unit(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  nbx::StateVector v(n);
  double s = 0;
  for (auto& x : v) {
    x = {g(rng), g(rng)};
    s += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

}  // namespace oracle
