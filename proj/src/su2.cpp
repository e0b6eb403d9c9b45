#include "nbx/su2.hpp"

#include <cmath>
#include <stdexcept>

namespace nbx::su2 {

double ladder_coeff(HalfInt j, HalfInt m, Direction direction) {
  if (!is_valid_projection(j, m))
    throw std::domain_error("invalid (j, m) = (" + j.str() + ", " + m.str() + ")");
  const int step = direction == Direction::raise ? 2 : -2;
  const int target = m.twice + step;
  if (target > j.twice || target < -j.twice) return 0.0;
  // j(j+1) - m(m+1) = (j - m)(j + m + 1), kept in integers of twice-values.
  const long long tj = j.twice, tm = m.twice;
  const long long four_times =
      direction == Direction::raise ? (tj - tm) * (tj + tm + 2) : (tj + tm) * (tj - tm + 2);
  return 0.5 * std::sqrt(static_cast<double>(four_times));
}

std::vector<double> jx_band(HalfInt j) {
  require_spin(j);
  const std::size_t n = dimension(j);
  std::vector<double> band(n > 0 ? n - 1 : 0);
  for (std::size_t k = 0; k + 1 < n; ++k)
    band[k] = 0.5 * ladder_coeff(j, projection_at(j, k), Direction::raise);
  return band;
}

ComplexMatrix operator_matrix(HalfInt j, Operator kind) {
  require_spin(j);
  const std::size_t n = dimension(j);
  ComplexMatrix out(n);
  if (kind == Operator::Jz) {
    for (std::size_t k = 0; k < n; ++k) out(k, k) = projection_at(j, k).value();
    return out;
  }
  const cplx i{0.0, 1.0};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double c = ladder_coeff(j, projection_at(j, k), Direction::raise);
    // <m+1| J+ |m> = c sits at (k+1, k); J- is its transpose.
    switch (kind) {
      case Operator::Jplus: out(k + 1, k) = c; break;
      case Operator::Jminus: out(k, k + 1) = c; break;
      case Operator::Jx:
        out(k + 1, k) = 0.5 * c;
        out(k, k + 1) = 0.5 * c;
        break;
      case Operator::Jy:  // (J+ - J-) / 2i
        out(k + 1, k) = -0.5 * i * c;
        out(k, k + 1) = 0.5 * i * c;
        break;
      case Operator::Jz: break;
    }
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("commutator: dimension mismatch");
  return a * b - b * a;
}

}  // namespace nbx::su2
