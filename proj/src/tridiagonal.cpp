#include "nbx/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace nbx::tridiagonal {
namespace {

void check_shapes(std::span<const double> diag, std::span<const double> off) {
  if (diag.empty()) throw std::invalid_argument("tridiagonal: empty matrix");
  if (off.size() + 1 != diag.size())
    throw std::invalid_argument("tridiagonal: off-diagonal must have n-1 entries");
}

}  // namespace

std::vector<double> eigenvalues(std::span<const double> diag, std::span<const double> off) {
  check_shapes(diag, off);
  const int n = static_cast<int>(diag.size());
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(off.begin(), off.end());
  e.push_back(0.0);
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw std::runtime_error("tridiagonal QL: no convergence");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      int i = m - 1;
      bool underflow = false;
      for (; i >= l; --i) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> eigenvector(std::span<const double> diag, std::span<const double> off,
                                double lambda, int iterations) {
  check_shapes(diag, off);
  const std::size_t n = diag.size();
  if (n == 1) return {1.0};

  double scale = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    scale = std::max(scale, std::abs(diag[k] - lambda) +
                                (k > 0 ? std::abs(off[k - 1]) : 0.0) +
                                (k + 1 < n ? std::abs(off[k]) : 0.0));
  const double tiny = std::max(scale, 1.0) * std::numeric_limits<double>::epsilon();

  // Pivoted LU of T - lambda I (same layout as LAPACK dgttrf).
  std::vector<double> d(n), du(n - 1), dl(n - 1), du2(n > 2 ? n - 2 : 0, 0.0);
  std::vector<std::uint8_t> swapped(n - 1, 0);
  for (std::size_t k = 0; k < n; ++k) d[k] = diag[k] - lambda;
  for (std::size_t k = 0; k + 1 < n; ++k) du[k] = dl[k] = off[k];

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      dl[i] = fact;
      d[i + 1] -= fact * du[i];
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const double temp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
      swapped[i] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (std::abs(d[k]) < tiny) d[k] = std::copysign(tiny, d[k] == 0.0 ? 1.0 : d[k]);

  // Deterministic pseudo-random start, so no parity symmetry of T can make
  // it orthogonal to the target vector.
  std::vector<double> x(n);
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  for (auto& v : x) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    v = 0.5 + static_cast<double>(state >> 11) * 0x1.0p-53;
  }

  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        x[i + 1] -= dl[i] * x[i];
      } else {
        const double temp = x[i];
        x[i] = x[i + 1];
        x[i + 1] = temp - dl[i] * x[i];
      }
    }
    x[n - 1] /= d[n - 1];
    x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (std::size_t ii = n - 2; ii-- > 0;)
      x[ii] = (x[ii] - du[ii] * x[ii + 1] - du2[ii] * x[ii + 2]) / d[ii];

    double nrm = 0.0;
    for (double v : x) nrm += v * v;
    nrm = std::sqrt(nrm);
    for (double& v : x) v /= nrm;
  }

  std::size_t big = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (std::abs(x[k]) > std::abs(x[big])) big = k;
  if (x[big] < 0.0)
    for (double& v : x) v = -v;
  return x;
}

}  // namespace nbx::tridiagonal
