#include "doctest.h"

#include "nbx/observables.hpp"
#include "nbx/rotation.hpp"
#include "nbx/spectrum.hpp"

#include <cmath>
#include <numbers>

using namespace nbx;
constexpr double pi = std::numbers::pi;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

ModelParams fig1(int m0, double theta) {
  return ModelParams::make({0, -2.0 * m0, 1}, theta, 0);
}

}  // namespace

TEST_CASE("Dicke distribution") {
  SUBCASE("basis vector") {
    StateVector e(5);
    e[2] = 1.0;
    const auto d = dicke_distribution(e);
    CHECK(d.j == h(4));
    CHECK(d.p == std::vector<double>{0, 0, 1, 0, 0});
  }
  SUBCASE("uniform superposition") {
    const StateVector u(8, cplx(0, 1 / std::sqrt(8.0)));
    for (double p : dicke_distribution(u).p) CHECK(p == doctest::Approx(0.125).epsilon(1e-15));
  }
  SUBCASE("rotated basis state gives squared little-d column") {
    const HalfInt j = h(30);
    const auto angles = RotationAngles::make(1.1, 2.0);
    const auto d = dicke_distribution(rotated_basis_state(j, angles, h(10)));
    const auto col = little_d_column(j, -1.1, h(10));
    double total = 0;
    for (std::size_t k = 0; k < col.size(); ++k) {
      CHECK(std::abs(d.p[k] - col[k] * col[k]) < 1e-12);
      total += d.p[k];
    }
    CHECK(std::abs(total - 1) < 1e-10);
  }
  CHECK_THROWS_AS(dicke_distribution(StateVector(3)), std::invalid_argument);
}

TEST_CASE("ground distribution") {
  SUBCASE("theta = 0 is an indicator at m0") {
    // m + 0.3 m^2 on j = 5 is lowest at m = -2, index 3
    const auto d = ground_distribution(ModelParams::make({0, 1, 0.3}, 0, 0), h(10));
    for (std::size_t k = 0; k < d.p.size(); ++k) CHECK(d.p[k] == (k == 3 ? 1.0 : 0.0));
  }
  SUBCASE("theta and 2 pi - theta give the same distribution") {
    const auto a = ground_distribution(fig1(37, 1.5), h(80));
    const auto b = ground_distribution(fig1(37, 2 * pi - 1.5), h(80));
    for (std::size_t k = 0; k < a.p.size(); ++k) CHECK(std::abs(a.p[k] - b.p[k]) < 1e-12);
  }
}

TEST_CASE("peak counting") {
  PopulationDistribution d{h(4), {0, 0, 1, 0, 0}};
  CHECK(count_peaks(d, 0.05) == 1);
  CHECK(count_peaks({h(4), {0.1, 0.3, 0.3, 0.2, 0.1}}, 0.0) == 1);  // plateau
  CHECK(count_peaks({h(4), {0.5, 0.1, 0.2, 0.1, 0.1}}, 0.0) == 2);  // edge maximum counts
  CHECK(count_peaks({h(4), {0.5, 0.1, 0.02, 0.0, 0.38}}, 0.05) == 2);
  CHECK(count_peaks({h(4), {0.5, 0.1, 0.02, 0.01, 0.37}}, 0.05) == 2);
  CHECK(count_peaks({h(4), {0.5, 0.1, 0.03, 0.01, 0.36}}, 0.05) == 2);
  CHECK(count_peaks({h(6), {0.5, 0.1, 0.03, 0.01, 0.02, 0.01, 0.33}}, 0.05) == 2);  // ripple below floor
  CHECK_THROWS_AS(count_peaks(d, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(count_peaks(d, -0.1), std::invalid_argument);
}

TEST_CASE("macroscopic superpositions at j = 1000") {
  const HalfInt j = HalfInt::from_int(1000);
  for (double theta : {1.5, pi / 4}) {
    for (int m0 : {1000, 999, 998, 997}) {
      CAPTURE(theta);
      CAPTURE(m0);
      const auto p = fig1(m0, theta);
      const auto g = ground_state(p, j);
      CHECK(g.m0 == HalfInt::from_int(m0));
      const auto d = dicke_distribution(g.pair.vector);
      double total = 0;
      for (double x : d.p) total += x;
      CHECK(std::abs(total - 1) < 1e-10);
      CHECK(count_peaks(d, 0.05) == 1000 - m0 + 1);
    }
  }
}
