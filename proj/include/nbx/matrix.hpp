#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nbx {

using cplx = std::complex<double>;

/// Amplitudes in the ascending-m Dicke basis.
using StateVector = std::vector<cplx>;

/// Dense row-major square matrix. Row/column k maps to m = -j + k.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t dim() const { return dim_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * dim_, dim_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * dim_, dim_}; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = SquareMatrix<cplx>;
using RealMatrix = SquareMatrix<double>;

ComplexMatrix to_complex(const RealMatrix& m);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
RealMatrix transpose(const RealMatrix& a);

StateVector multiply(const ComplexMatrix& a, std::span<const cplx> x);

double max_abs(const ComplexMatrix& a);
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);

/// Largest |a(r,c) - conj(a(c,r))|, relative to max|a| (zero matrix gives 0).
double hermiticity_error(const ComplexMatrix& a);
/// Largest entry of |A^dagger A - I|.
double unitarity_error(const ComplexMatrix& a);
double orthogonality_error(const RealMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& a, double tol = 1e-10);

double norm(std::span<const cplx> v);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);  // <a|b>

}  // namespace nbx
