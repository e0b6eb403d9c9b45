#include "nbx/spectrum.hpp"

#include "nbx/rotation.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace nbx {
namespace {

long double energy_ld(const ModelParams& params, HalfInt m) {
  const long double x = static_cast<long double>(m.twice) / 2.0L;
  long double e = params.A.back();
  for (std::size_t i = params.A.size() - 1; i-- > 0;) e = e * x + params.A[i];
  return e;
}

long double degeneracy_tolerance(const ModelParams& params, HalfInt j) {
  return 64.0L * LDBL_EPSILON * static_cast<long double>(energy_scale(params, j));
}

}  // namespace

double energy_scale(const ModelParams& params, HalfInt j) {
  double scale = 1.0, power = 1.0;
  for (double a : params.A) {
    scale += std::abs(a) * power;
    power *= j.value();
  }
  return scale;
}

EigenPair eigen_pair(const ModelParams& params, HalfInt j, HalfInt m) {
  return {m, params.energy(m), rotated_basis_state(j, params.angles, m)};
}

std::vector<EigenPair> exact_spectrum(const ModelParams& params, HalfInt j) {
  require_spin(j);
  const std::size_t n = dimension(j);
  // U^dagger |m> = exp(-i phi m) exp(-i theta Jy)|m>, i.e. row m of
  // exp(i theta Jy) times the phase; one matrix serves every m.
  const RealMatrix d = little_d(j, params.angles.theta);
  std::vector<EigenPair> pairs;
  pairs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const HalfInt m = projection_at(j, k);
    const cplx phase =
        params.angles.phi == 0.0 ? cplx{1.0} : std::polar(1.0, -params.angles.phi * m.value());
    StateVector v(n);
    for (std::size_t a = 0; a < n; ++a) v[a] = phase * d(k, a);
    pairs.push_back({m, params.energy(m), std::move(v)});
  }
  return pairs;
}

HalfInt closed_form_ground_m(const ModelParams& params, HalfInt j) {
  if (params.n != 2) throw std::invalid_argument("closed-form ground state requires n = 2");
  require_spin(j);
  const double a1 = params.A[1], a2 = params.A[2];
  const double J = j.value();
  if (a2 > 0.0) {
    const double vertex = -a1 / (2.0 * a2);
    if (std::abs(vertex) > J) return a1 > 0.0 ? -j : j;
    // Nearest grid point m = -j + k; exact halves go to the lower m.
    const double shifted = vertex + J;
    const double k_floor = std::floor(shifted);
    double k = shifted - k_floor > 0.5 ? k_floor + 1.0 : k_floor;
    k = std::clamp(k, 0.0, static_cast<double>(j.twice));
    return projection_at(j, static_cast<std::size_t>(k));
  }
  if (a2 < 0.0) return a1 < 0.0 ? j : -j;
  return a1 < 0.0 ? j : -j;
}

ScanResult ground_state_scan(const ModelParams& params, HalfInt j) {
  require_spin(j);
  const std::size_t n = dimension(j);
  const long double tol = degeneracy_tolerance(params, j);
  std::vector<long double> e(n);
  for (std::size_t k = 0; k < n; ++k) e[k] = energy_ld(params, projection_at(j, k));
  const long double emin = *std::min_element(e.begin(), e.end());
  ScanResult out;
  bool found = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (e[k] <= emin + tol) {
      if (!found) {
        out.m0 = projection_at(j, k);
        out.energy = e[k];
        found = true;
      }
      ++out.minimizers;
    }
  }
  return out;
}

GroundStateResult ground_state(const ModelParams& params, HalfInt j) {
  const ScanResult scan = ground_state_scan(params, j);
  GroundStateResult out;
  out.degenerate = scan.minimizers >= 2;
  out.m0 = scan.m0;
  out.method = GroundMethod::scan;
  if (params.n == 2) {
    const HalfInt m_cf = closed_form_ground_m(params, j);
    const long double gap = energy_ld(params, m_cf) - scan.energy;
    if (gap > degeneracy_tolerance(params, j))
      throw std::logic_error("closed-form ground state m=" + m_cf.str() +
                             " is above the scanned minimum at m=" + scan.m0.str());
    out.method = GroundMethod::closed_form;
    if (!out.degenerate) out.m0 = m_cf;
  }
  out.pair = eigen_pair(params, j, out.m0);
  return out;
}

double residual_norm(const ModelParams& params, HalfInt j, const EigenPair& pair) {
  if (pair.vector.size() != dimension(j))
    throw std::invalid_argument("residual_norm: dimension mismatch");
  const StateVector hv = apply_hamiltonian(params, j, pair.vector);
  double s = 0.0;
  for (std::size_t k = 0; k < hv.size(); ++k) s += std::norm(hv[k] - pair.energy * pair.vector[k]);
  return std::sqrt(s);
}

double banded_residual_norm(const ModelParams& params, HalfInt j, const EigenPair& pair) {
  if (pair.vector.size() != dimension(j))
    throw std::invalid_argument("banded_residual_norm: dimension mismatch");
  const StateVector hv = apply_hamiltonian_banded(params, j, pair.vector);
  double s = 0.0;
  for (std::size_t k = 0; k < hv.size(); ++k) s += std::norm(hv[k] - pair.energy * pair.vector[k]);
  return std::sqrt(s);
}

EigenSystem brute_diagonalize(const ComplexMatrix& h) {
  const std::size_t n = h.dim();
  if (n == 0) throw std::invalid_argument("brute_diagonalize: empty matrix");
  if (n > brute_force_max_dim)
    throw std::invalid_argument("brute_diagonalize: dimension " + std::to_string(n) +
                                " exceeds oracle limit " + std::to_string(brute_force_max_dim));
  if (!is_hermitian(h, 1e-12)) throw std::invalid_argument("brute_diagonalize: not Hermitian");

  ComplexMatrix a = h;
  for (std::size_t k = 0; k < n; ++k) a(k, k) = a(k, k).real();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double total = std::max(frobenius_norm(a), std::numeric_limits<double>::min());

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
  };

  int sweep = 0;
  for (; sweep < 60 && off_norm() > 1e-15 * total; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        // G = diag(1, e^{-i alpha}) [[c, s], [-s, c]] on (p, q) makes a(p, q) real,
        // then annihilates it as in the real symmetric case.
        const cplx ph = a(p, q) / g;  // e^{i alpha}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const cplx gqp = -s * std::conj(ph);  // G(q, p)
        const cplx gqq = c * std::conj(ph);   // G(q, q)

        for (std::size_t k = 0; k < n; ++k) {  // A <- A G
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + gqp * akq;
          a(k, q) = s * akp + gqq * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- G^dagger A
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // V <- V G
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + gqp * vkq;
          v(k, q) = s * vkp + gqq * vkq;
        }
      }
    }
  }
  if (off_norm() > 1e-15 * total * 1e3)
    throw std::runtime_error("brute_diagonalize: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  EigenSystem out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace nbx
