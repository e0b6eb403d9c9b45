#include "nbx/matrix.hpp"

#include "nbx/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbx {
namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

}  // namespace

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim());
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) out.data()[i] = a.data()[i] + b.data()[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim());
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) out.data()[i] = a.data()[i] - b.data()[i];
  return out;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) out.data()[i] = s * a.data()[i];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim());
  const std::size_t n = a.dim();
  // Row r of the product is (row r of a) times b, i.e. b^T times row r.
  const ComplexMatrix bt = [&] {
    ComplexMatrix t(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) t(c, r) = b(r, c);
    return t;
  }();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    kernels::complex_matvec(bt.data(), n, n, a.row(r).data(), out.row(r).data());
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = a(r, c);
  return out;
}

StateVector multiply(const ComplexMatrix& a, std::span<const cplx> x) {
  require_same_dim(a.dim(), x.size());
  StateVector y(a.dim());
  kernels::complex_matvec(a.data(), a.dim(), a.dim(), x.data(), y.data());
  return y;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) m = std::max(m, std::abs(a.data()[i]));
  return m;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim());
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) s += std::norm(a.data()[i]);
  return std::sqrt(s);
}

double hermiticity_error(const ComplexMatrix& a) {
  const double scale = max_abs(a);
  if (scale == 0.0) return 0.0;
  double err = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = r; c < a.dim(); ++c)
      err = std::max(err, std::abs(a(r, c) - std::conj(a(c, r))));
  return err / scale;
}

double unitarity_error(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  // (A^dagger A)(r, c) = <column r | column c>; columns of A are rows of A^T.
  ComplexMatrix cols(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) cols(c, r) = a(r, c);
  double err = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const cplx g = kernels::cdot(cols.row(r).data(), cols.row(c).data(), n);
      err = std::max(err, std::abs(g - (r == c ? 1.0 : 0.0)));
    }
  return err;
}

double orthogonality_error(const RealMatrix& a) {
  const std::size_t n = a.dim();
  const RealMatrix at = transpose(a);
  double err = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const double g = kernels::dot(at.row(r).data(), at.row(c).data(), n);
      err = std::max(err, std::abs(g - (r == c ? 1.0 : 0.0)));
    }
  return err;
}

bool is_hermitian(const ComplexMatrix& a, double tol) { return hermiticity_error(a) <= tol; }

bool is_unitary(const ComplexMatrix& a, double tol) { return unitarity_error(a) <= tol; }

double norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  require_same_dim(a.size(), b.size());
  return kernels::cdot(a.data(), b.data(), a.size());
}

}  // namespace nbx
