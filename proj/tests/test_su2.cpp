#include "doctest.h"
#include "oracles.hpp"

#include "nbx/su2.hpp"

#include <cmath>

using namespace nbx;
using su2::Direction;
using su2::Operator;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

double scalar_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs_difference(a, b); }

}  // namespace

TEST_CASE("half-integer bookkeeping") {
  CHECK(h(3).value() == 1.5);
  CHECK(h(3).str() == "3/2");
  CHECK(h(-1).str() == "-1/2");
  CHECK(HalfInt::from_int(2).str() == "2");
  CHECK(dimension(h(3)) == 4);
  CHECK(is_valid_projection(h(3), h(-3)));
  CHECK_FALSE(is_valid_projection(h(3), h(2)));   // parity
  CHECK_FALSE(is_valid_projection(h(3), h(5)));   // range
  CHECK(basis_index(h(3), h(1)) == 2);
  CHECK(projection_at(h(3), 2) == h(1));
  CHECK_THROWS_AS(basis_index(h(2), h(1)), std::domain_error);
}

TEST_CASE("ladder coefficients") {
  CHECK(su2::ladder_coeff(h(1), h(-1), Direction::raise) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(su2::ladder_coeff(h(2), h(0), Direction::raise) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  const double big = su2::ladder_coeff(h(2000), h(1998), Direction::raise);
  CHECK(std::abs(big - static_cast<double>(oracle::raise_elem(h(2000), h(1998)))) < 1e-13);
  CHECK(std::abs(big - std::sqrt(2000.0)) < 1e-13);

  SUBCASE("leaving the multiplet gives zero") {
    CHECK(su2::ladder_coeff(h(2), h(2), Direction::raise) == 0.0);
    CHECK(su2::ladder_coeff(h(2), h(-2), Direction::lower) == 0.0);
  }
  SUBCASE("invalid pairing throws") {
    CHECK_THROWS_AS(su2::ladder_coeff(h(2), h(1), Direction::raise), std::domain_error);
    CHECK_THROWS_AS(su2::ladder_coeff(h(2), h(4), Direction::lower), std::domain_error);
  }
  SUBCASE("raise from m equals lower from m+1") {
    for (int tj = 1; tj <= 30; ++tj)
      for (int tm = -tj; tm < tj; tm += 2)
        CHECK(su2::ladder_coeff(h(tj), h(tm), Direction::raise) ==
              su2::ladder_coeff(h(tj), h(tm + 2), Direction::lower));
  }
}

TEST_CASE("operator matrices, small spins") {
  const ComplexMatrix jz = su2::operator_matrix(h(1), Operator::Jz);
  CHECK(jz(0, 0) == cplx(-0.5));
  CHECK(jz(1, 1) == cplx(0.5));
  CHECK(jz(0, 1) == cplx(0.0));

  const ComplexMatrix jp = su2::operator_matrix(h(2), Operator::Jplus);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const bool on = (r == 1 && c == 0) || (r == 2 && c == 1);
      CHECK(std::abs(jp(r, c) - cplx(on ? std::sqrt(2.0) : 0.0)) < 1e-15);
    }

  const ComplexMatrix jy = su2::operator_matrix(h(1), Operator::Jy);
  // sigma_y / 2 in ascending order (-1/2, +1/2)
  CHECK(std::abs(jy(1, 0) - cplx(0, -0.5)) < 1e-15);
  CHECK(std::abs(jy(0, 1) - cplx(0, 0.5)) < 1e-15);
}

TEST_CASE("commutator examples") {
  const auto jz1 = su2::operator_matrix(h(2), Operator::Jz);
  const auto jp1 = su2::operator_matrix(h(2), Operator::Jplus);
  CHECK(scalar_diff(su2::commutator(jz1, jp1), jp1) < 1e-14);

  const auto jp = su2::operator_matrix(h(3), Operator::Jplus);
  const auto jm = su2::operator_matrix(h(3), Operator::Jminus);
  const auto jz = su2::operator_matrix(h(3), Operator::Jz);
  CHECK(scalar_diff(su2::commutator(jp, jm), cplx(2.0) * jz) < 1e-14);
  CHECK(max_abs(su2::commutator(jp, jp)) == 0.0);
  CHECK_THROWS_AS(su2::commutator(jp, jz1), std::invalid_argument);
}

TEST_CASE("su(2) algebra holds for every j up to 25") {
  for (int tj = 0; tj <= 50; ++tj) {
    CAPTURE(tj);
    const HalfInt j = h(tj);
    const auto jz = su2::operator_matrix(j, Operator::Jz);
    const auto jp = su2::operator_matrix(j, Operator::Jplus);
    const auto jm = su2::operator_matrix(j, Operator::Jminus);
    const auto jx = su2::operator_matrix(j, Operator::Jx);
    const auto jy = su2::operator_matrix(j, Operator::Jy);
    CHECK(scalar_diff(su2::commutator(jz, jp), jp) < 1e-10);
    CHECK(scalar_diff(su2::commutator(jz, jm), cplx(-1.0) * jm) < 1e-10);
    CHECK(scalar_diff(su2::commutator(jp, jm), cplx(2.0) * jz) < 1e-10);
    const double jj = j.value() * (j.value() + 1.0);
    CHECK(scalar_diff(jx * jx + jy * jy + jz * jz, cplx(jj) * ComplexMatrix::identity(dimension(j))) <
          1e-10);
    CHECK(oracle::hermitian_defect(jx) == 0.0);
    CHECK(oracle::hermitian_defect(jy) == 0.0);

    // J+ strictly on the first subdiagonal (row = col + 1), J- on the superdiagonal
    for (std::size_t r = 0; r < jp.dim(); ++r)
      for (std::size_t c = 0; c < jp.dim(); ++c) {
        if (r != c + 1) CHECK(jp(r, c) == cplx(0.0));
        if (c != r + 1) CHECK(jm(r, c) == cplx(0.0));
      }
  }
}

TEST_CASE("jx band matches the matrix") {
  const HalfInt j = h(7);
  const auto band = su2::jx_band(j);
  const auto jx = su2::operator_matrix(j, Operator::Jx);
  REQUIRE(band.size() == 7);
  for (std::size_t k = 0; k < band.size(); ++k) CHECK(jx(k + 1, k).real() == band[k]);
}
