#include "nbx/rotation.hpp"

#include "nbx/kernels.hpp"
#include "nbx/su2.hpp"
#include "nbx/tridiagonal.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace nbx {
namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double reduce_angle(double a) {
  double r = std::fmod(a, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

// z * i^k, exact.
cplx times_i_pow(cplx z, std::size_t k) {
  switch (k % 4) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return -z;
    default: return {z.imag(), -z.real()};
  }
}

std::shared_ptr<const JxEigenbasis> build_eigenbasis(HalfInt j) {
  const std::size_t n = dimension(j);
  auto basis = std::make_shared<JxEigenbasis>();
  basis->j = j;
  basis->vectors = RealMatrix(n);

  const std::vector<double> diag(n, 0.0);
  const std::vector<double> off = su2::jx_band(j);
  const std::vector<double> lambda = tridiagonal::eigenvalues(diag, off);

  double err = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    err = std::max(err, std::abs(lambda[k] - projection_at(j, k).value()));
  if (err > 1e-9 * (1.0 + j.value()))
    throw std::runtime_error("Jx eigenvalues deviate from m by " + std::to_string(err));
  basis->eigenvalue_error = err;

  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<double> v = tridiagonal::eigenvector(diag, off, lambda[k]);
    for (std::size_t a = 0; a < n; ++a) basis->vectors(a, k) = v[a];
  }
  basis->vectors_t = transpose(basis->vectors);
  return basis;
}

void require_dim(HalfInt j, std::size_t size) {
  if (size != dimension(j))
    throw std::invalid_argument("state dimension " + std::to_string(size) +
                                " does not match spin j=" + j.str());
}

}  // namespace

RotationAngles RotationAngles::make(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw std::invalid_argument("rotation angles must be finite");
  return {reduce_angle(theta), reduce_angle(phi), theta, phi};
}

std::shared_ptr<const JxEigenbasis> jx_eigenbasis(HalfInt j) {
  require_spin(j);
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const JxEigenbasis>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(j.twice);
  if (it != cache.end()) return it->second;
  auto basis = build_eigenbasis(j);
  cache.emplace(j.twice, basis);
  return basis;
}

RealMatrix little_d(HalfInt j, double theta) {
  require_spin(j);
  const std::size_t n = dimension(j);
  if (theta == 0.0) return RealMatrix::identity(n);
  const auto basis = jx_eigenbasis(j);
  std::vector<double> wc(n), ws(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double m = projection_at(j, k).value();
    wc[k] = std::cos(theta * m);
    ws[k] = std::sin(theta * m);
  }
  // entry(a, b) = Re[(-i)^(a-b) (Mc + i Ms)](a, b) with Mc, Ms symmetric:
  // (a - b) mod 4 = 0, 1, 2, 3 selects Mc, Ms, -Mc, -Ms.
  RealMatrix d(n);
  for (std::size_t a = 0; a < n; ++a) {
    const double* ra = basis->vectors.row(a).data();
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t r = (b - a) % 4;  // (a - b) mod 4 == (4 - r) mod 4
      const bool odd = r % 2 == 1;
      const double s = kernels::weighted_dot(ra, basis->vectors.row(b).data(),
                                             odd ? ws.data() : wc.data(), n);
      const double v = (4 - r) % 4 < 2 ? s : -s;
      d(a, b) = v;
      d(b, a) = odd ? -v : v;
    }
  }
  return d;
}

std::vector<double> little_d_column(HalfInt j, double theta, HalfInt m) {
  const std::size_t n = dimension(j);
  const std::size_t b = basis_index(j, m);
  std::vector<double> col(n, 0.0);
  if (theta == 0.0) {
    col[b] = 1.0;
    return col;
  }
  const auto basis = jx_eigenbasis(j);
  std::vector<double> wc(n), ws(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double mk = projection_at(j, k).value();
    wc[k] = basis->vectors(b, k) * std::cos(theta * mk);
    ws[k] = basis->vectors(b, k) * std::sin(theta * mk);
  }
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t r = (a + 4 * n - b) % 4;
    const double* ra = basis->vectors.row(a).data();
    const double s = kernels::dot(ra, r % 2 == 0 ? wc.data() : ws.data(), n);
    col[a] = r < 2 ? s : -s;
  }
  return col;
}

StateVector apply_little_d(HalfInt j, double theta, std::span<const cplx> v) {
  require_dim(j, v.size());
  const std::size_t n = v.size();
  if (theta == 0.0) return StateVector(v.begin(), v.end());
  const auto basis = jx_eigenbasis(j);
  StateVector u(n), w(n), y(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = times_i_pow(v[k], k);  // D^dagger v
  kernels::real_matvec(basis->vectors_t.data(), n, n, u.data(), w.data());
  for (std::size_t k = 0; k < n; ++k) w[k] *= std::polar(1.0, theta * projection_at(j, k).value());
  kernels::real_matvec(basis->vectors.data(), n, n, w.data(), y.data());
  for (std::size_t k = 0; k < n; ++k) y[k] = times_i_pow(y[k], (4 - k % 4) % 4);  // D y
  return y;
}

ComplexMatrix rotation_matrix(HalfInt j, const RotationAngles& angles) {
  const RealMatrix d = little_d(j, angles.theta);
  const std::size_t n = d.dim();
  ComplexMatrix u(n);
  for (std::size_t r = 0; r < n; ++r) {
    const cplx phase = angles.phi == 0.0 ? cplx{1.0}
                                         : std::polar(1.0, angles.phi * projection_at(j, r).value());
    for (std::size_t c = 0; c < n; ++c) u(r, c) = phase * d(r, c);
  }
  return u;
}

StateVector apply_rotation(HalfInt j, const RotationAngles& angles, std::span<const cplx> v) {
  StateVector y = apply_little_d(j, angles.theta, v);
  if (angles.phi != 0.0)
    for (std::size_t k = 0; k < y.size(); ++k)
      y[k] *= std::polar(1.0, angles.phi * projection_at(j, k).value());
  return y;
}

StateVector apply_rotation_adjoint(HalfInt j, const RotationAngles& angles,
                                   std::span<const cplx> v) {
  require_dim(j, v.size());
  StateVector w(v.begin(), v.end());
  if (angles.phi != 0.0)
    for (std::size_t k = 0; k < w.size(); ++k)
      w[k] *= std::polar(1.0, -angles.phi * projection_at(j, k).value());
  return apply_little_d(j, -angles.theta, w);
}

StateVector rotated_basis_state(HalfInt j, const RotationAngles& angles, HalfInt m) {
  // U^dagger |m> = exp(-i phi m) exp(-i theta Jy) |m>.
  const std::vector<double> col = little_d_column(j, -angles.theta, m);
  const cplx phase = angles.phi == 0.0 ? cplx{1.0} : std::polar(1.0, -angles.phi * m.value());
  StateVector out(col.size());
  for (std::size_t k = 0; k < col.size(); ++k) out[k] = phase * col[k];
  return out;
}

ComplexMatrix rotate_operator(const ComplexMatrix& u, const ComplexMatrix& o) {
  if (u.dim() != o.dim()) throw std::invalid_argument("rotate_operator: dimension mismatch");
  return adjoint(u) * (o * u);
}

}  // namespace nbx
