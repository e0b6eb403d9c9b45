#include "doctest.h"
#include "oracles.hpp"

#include "nbx/rotation.hpp"
#include "nbx/spectrum.hpp"
#include "nbx/su2.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace nbx;
constexpr double pi = std::numbers::pi;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

double real_max_diff(const RealMatrix& a, const RealMatrix& b) {
  double d = 0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

}  // namespace

TEST_CASE("angles are reduced and recorded") {
  const auto a = RotationAngles::make(2 * pi + 0.5, -0.25);
  CHECK(a.theta == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(a.phi == doctest::Approx(2 * pi - 0.25).epsilon(1e-14));
  CHECK(a.theta_input == 2 * pi + 0.5);
  CHECK(a.canonicalized());
  CHECK_FALSE(RotationAngles::make(0.3, 0.1).canonicalized());
  CHECK_THROWS_AS(RotationAngles::make(NAN, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(RotationAngles::make(0.0, INFINITY), std::invalid_argument);
}

TEST_CASE("little d for spin 1/2 follows the +i theta Jy convention") {
  for (double th : {0.3, 1.1, 2.9}) {
    const RealMatrix d = little_d(h(1), th);
    // exp(i th sigma_y / 2) = cos(th/2) I + i sin(th/2) sigma_y; i sigma_y = [[0, 1], [-1, 0]]
    // in the (+1/2, -1/2) order, so in ascending order (-1/2, +1/2):
    CHECK(d(0, 0) == doctest::Approx(std::cos(th / 2)).epsilon(1e-15));
    CHECK(d(1, 1) == doctest::Approx(std::cos(th / 2)).epsilon(1e-15));
    CHECK(d(1, 0) == doctest::Approx(std::sin(th / 2)).epsilon(1e-15));
    CHECK(d(0, 1) == doctest::Approx(-std::sin(th / 2)).epsilon(1e-15));
    CHECK(oracle::max_diff(oracle::series_little_d(h(1), th), d) < 1e-15);
  }
}

TEST_CASE("little d matches the series exponential") {
  CHECK(oracle::max_diff(oracle::series_little_d(h(2), pi / 3), little_d(h(2), pi / 3)) < 1e-14);
  for (int tj = 0; tj <= 14; ++tj)
    for (double th : {0.05, 0.7, 1.5, 2.2, 3.1, 4.0, 5.9}) {
      CAPTURE(tj);
      CAPTURE(th);
      CHECK(oracle::max_diff(oracle::series_little_d(h(tj), th), little_d(h(tj), th)) < 1e-12);
    }
}

TEST_CASE("little d at theta = 0 is the identity") {
  for (int tj : {0, 1, 2, 7, 40, 2000}) {
    const RealMatrix d = little_d(h(tj), 0.0);
    for (std::size_t r = 0; r < d.dim(); r += 1 + d.dim() / 50)
      for (std::size_t c = 0; c < d.dim(); ++c) CHECK(d(r, c) == (r == c ? 1.0 : 0.0));
  }
}

TEST_CASE("little d composition and orthogonality up to j = 25") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2 * pi, 2 * pi);
  for (int tj = 0; tj <= 50; tj += 1) {
    const double t1 = u(rng), t2 = u(rng);
    const RealMatrix d1 = little_d(h(tj), t1), d2 = little_d(h(tj), t2);
    const ComplexMatrix prod = to_complex(d1) * to_complex(d2);
    CHECK(max_abs_difference(prod, to_complex(little_d(h(tj), t1 + t2))) < 1e-9);
    CHECK(orthogonality_error(d1) < 1e-12);
  }
}

TEST_CASE("columns and the matrix-free apply agree with the matrix") {
  const HalfInt j = h(25);
  const RealMatrix d = little_d(j, 1.2);
  for (int tm : {-25, -3, 1, 25}) {
    const auto col = little_d_column(j, 1.2, h(tm));
    const std::size_t c = basis_index(j, h(tm));
    for (std::size_t r = 0; r < d.dim(); ++r) CHECK(std::abs(col[r] - d(r, c)) < 1e-14);
  }
  std::mt19937_64 rng(3);
  const StateVector v = oracle::random_unit(rng, dimension(j));
  const StateVector w = apply_little_d(j, 1.2, v);
  const StateVector ref = multiply(to_complex(d), v);
  for (std::size_t k = 0; k < w.size(); ++k) CHECK(std::abs(w[k] - ref[k]) < 1e-13);
}

TEST_CASE("rotation matrix") {
  SUBCASE("identity at zero angles") {
    const auto u = rotation_matrix(h(5), RotationAngles::make(0, 0));
    CHECK(max_abs_difference(u, ComplexMatrix::identity(6)) == 0.0);
  }
  SUBCASE("unitary") {
    CHECK(unitarity_error(rotation_matrix(h(3), RotationAngles::make(0.7, 1.1))) < 1e-10);
  }
  SUBCASE("series product") {
    CHECK(oracle::max_diff(oracle::series_rotation(h(4), 0.4, 0.9),
                           rotation_matrix(h(4), RotationAngles::make(0.4, 0.9))) < 1e-9);
    CHECK(oracle::max_diff(oracle::series_rotation(h(7), 2.4, 5.1),
                           rotation_matrix(h(7), RotationAngles::make(2.4, 5.1))) < 1e-12);
  }
  SUBCASE("apply and adjoint apply") {
    std::mt19937_64 rng(5);
    const HalfInt j = h(9);
    const auto angles = RotationAngles::make(0.8, 2.3);
    const ComplexMatrix u = rotation_matrix(j, angles);
    const StateVector v = oracle::random_unit(rng, dimension(j));
    const StateVector a = apply_rotation(j, angles, v), b = multiply(u, v);
    const StateVector c = apply_rotation_adjoint(j, angles, v), e = multiply(adjoint(u), v);
    for (std::size_t k = 0; k < v.size(); ++k) {
      CHECK(std::abs(a[k] - b[k]) < 1e-13);
      CHECK(std::abs(c[k] - e[k]) < 1e-13);
    }
  }
}

TEST_CASE("rotation matrix stays unitary at j = 1000") {
  const HalfInt j = HalfInt::from_int(1000);
  const auto angles = RotationAngles::make(1.5, 0.4);
  const RealMatrix d = little_d(j, angles.theta);
  CHECK(orthogonality_error(d) < 1e-8);
  // U = diag(phase) d, so U^dagger U = d^T d; spot rows of U against each other.
  const ComplexMatrix u = rotation_matrix(j, angles);
  for (std::size_t a : {0u, 700u, 1000u, 2000u})
    for (std::size_t b : {0u, 3u, 1000u, 1999u}) {
      cplx s = 0;
      for (std::size_t k = 0; k < u.dim(); ++k) s += std::conj(u(k, a)) * u(k, b);
      CHECK(std::abs(s - (a == b ? cplx(1) : cplx(0))) < 1e-8);
    }
}

TEST_CASE("rotated basis states") {
  SUBCASE("theta = 0 gives Dicke vectors") {
    const auto v = rotated_basis_state(h(4), RotationAngles::make(0, 0), h(2));
    for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] == cplx(k == 3 ? 1.0 : 0.0));
  }
  SUBCASE("spin 1/2, theta = pi moves m = +1/2 onto m = -1/2") {
    const auto v = rotated_basis_state(h(1), RotationAngles::make(pi, 0), h(1));
    CHECK(std::abs(v[0]) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(v[1]) < 1e-15);
  }
  SUBCASE("j = 10 matches a dense U^dagger column") {
    const HalfInt j = h(20);
    const auto angles = RotationAngles::make(1.2, 0.6);
    const auto v = rotated_basis_state(j, angles, h(20));
    const ComplexMatrix ud = adjoint(rotation_matrix(j, angles));
    StateVector col(dimension(j));
    for (std::size_t k = 0; k < col.size(); ++k) col[k] = ud(k, 20);
    CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(inner(col, v)) == doctest::Approx(1.0).epsilon(1e-10));
    for (std::size_t k = 0; k < col.size(); ++k) CHECK(std::abs(col[k] - v[k]) < 1e-13);
  }
  SUBCASE("invalid m throws") {
    CHECK_THROWS_AS(rotated_basis_state(h(2), RotationAngles::make(0.1, 0), h(1)), std::domain_error);
  }
}

TEST_CASE("rotate operator") {
  const HalfInt j = h(2);
  const auto jz = su2::operator_matrix(j, su2::Operator::Jz);
  const auto u = rotation_matrix(j, RotationAngles::make(0.3, 0.0));
  CHECK(max_abs_difference(rotate_operator(ComplexMatrix::identity(3), jz), jz) == 0.0);
  CHECK(max_abs_difference(rotate_operator(u, ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) <
        1e-15);
  const auto r = rotate_operator(u, jz);
  CHECK(oracle::hermitian_defect(r) < 1e-15);
  const auto ev = oracle::hermitian_eigenvalues(r);
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(ev[1]) < 1e-14);
  CHECK(ev[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(rotate_operator(u, su2::operator_matrix(h(1), su2::Operator::Jz)),
                  std::invalid_argument);
}

TEST_CASE("U^dagger Jz U is cos(theta) Jz + sin(theta) Jx for every phi") {
  for (int tj : {1, 4, 9}) {
    const HalfInt j = h(tj);
    const auto jz = su2::operator_matrix(j, su2::Operator::Jz);
    const auto jx = su2::operator_matrix(j, su2::Operator::Jx);
    for (double th : {0.4, 2.0})
      for (double ph : {0.0, 1.3, 4.4}) {
        const auto r = rotate_operator(rotation_matrix(j, RotationAngles::make(th, ph)), jz);
        CHECK(max_abs_difference(r, cplx(std::cos(th)) * jz + cplx(std::sin(th)) * jx) < 1e-13);
      }
  }
}

TEST_CASE("rotation preserves spectra up to j = 12") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 2 * pi);
  for (int tj = 0; tj <= 24; tj += 3) {
    const HalfInt j = h(tj);
    const auto o = su2::operator_matrix(j, su2::Operator::Jx) +
                   cplx(0.3) * su2::operator_matrix(j, su2::Operator::Jz) *
                       su2::operator_matrix(j, su2::Operator::Jz);
    const auto before = oracle::hermitian_eigenvalues(o);
    const auto after =
        oracle::hermitian_eigenvalues(rotate_operator(rotation_matrix(j, RotationAngles::make(u(rng), u(rng))), o));
    for (std::size_t k = 0; k < before.size(); ++k) CHECK(std::abs(before[k] - after[k]) < 1e-10);
  }
}

TEST_CASE("half-integer spin changes sign under a full turn") {
  const HalfInt j = h(3);
  const RealMatrix a = little_d(j, 0.4);
  const RealMatrix b = little_d(j, 0.4 + 2 * pi);
  // theta is reduced mod 2 pi inside RotationAngles, not inside little_d
  double d = 0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) d = std::max(d, std::abs(a(r, c) + b(r, c)));
  CHECK(d < 1e-13);
  CHECK(real_max_diff(little_d(h(4), 0.4), little_d(h(4), 0.4 + 2 * pi)) < 1e-13);
}
