#include "doctest.h"

#include "nbx/kernels.hpp"

#include <complex>
#include <random>
#include <vector>

namespace k = nbx::kernels;
using cplx = std::complex<double>;

namespace {

std::vector<double> reals(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

std::vector<cplx> complexes(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

}  // namespace

TEST_CASE("scalar kernels against naive loops") {
  std::mt19937_64 rng(1);
  const auto a = reals(rng, 13), b = reals(rng, 13), w = reals(rng, 13);
  double d = 0, wd = 0;
  for (int i = 0; i < 13; ++i) {
    d += a[i] * b[i];
    wd += a[i] * b[i] * w[i];
  }
  CHECK(k::scalar::dot(a.data(), b.data(), 13) == doctest::Approx(d).epsilon(1e-14));
  CHECK(k::scalar::weighted_dot(a.data(), b.data(), w.data(), 13) == doctest::Approx(wd).epsilon(1e-14));

  const auto x = complexes(rng, 5), y = complexes(rng, 5);
  cplx c = 0;
  for (int i = 0; i < 5; ++i) c += std::conj(x[i]) * y[i];
  CHECK(std::abs(k::scalar::cdot(x.data(), y.data(), 5) - c) < 1e-14);
}

TEST_CASE("vector kernels match the scalar reference") {
  if (!k::supported(k::Level::avx2)) {
    MESSAGE("AVX2 not available; vector path forwards to scalar");
  }
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 201u, 2001u}) {
    CAPTURE(n);
    const auto a = reals(rng, n), b = reals(rng, n), w = reals(rng, n);
    const double tol = 1e-13 * (1.0 + static_cast<double>(n));
    CHECK(std::abs(k::avx2::dot(a.data(), b.data(), n) - k::scalar::dot(a.data(), b.data(), n)) < tol);
    CHECK(std::abs(k::avx2::weighted_dot(a.data(), b.data(), w.data(), n) -
                   k::scalar::weighted_dot(a.data(), b.data(), w.data(), n)) < tol);
    const auto x = complexes(rng, n), y = complexes(rng, n);
    CHECK(std::abs(k::avx2::cdot(x.data(), y.data(), n) - k::scalar::cdot(x.data(), y.data(), n)) < tol);
  }
  for (std::size_t rows : {1u, 3u, 8u, 17u}) {
    for (std::size_t cols : {1u, 2u, 5u, 16u, 33u}) {
      CAPTURE(rows);
      CAPTURE(cols);
      const auto ra = reals(rng, rows * cols);
      const auto ca = complexes(rng, rows * cols);
      const auto x = complexes(rng, cols);
      std::vector<cplx> y1(rows), y2(rows);
      k::scalar::real_matvec(ra.data(), rows, cols, x.data(), y1.data());
      k::avx2::real_matvec(ra.data(), rows, cols, x.data(), y2.data());
      for (std::size_t r = 0; r < rows; ++r) CHECK(std::abs(y1[r] - y2[r]) < 1e-13);
      k::scalar::complex_matvec(ca.data(), rows, cols, x.data(), y1.data());
      k::avx2::complex_matvec(ca.data(), rows, cols, x.data(), y2.data());
      for (std::size_t r = 0; r < rows; ++r) CHECK(std::abs(y1[r] - y2[r]) < 1e-13);
    }
  }
}

TEST_CASE("dispatch level can be forced") {
  const k::Level before = k::active_level();
  k::set_level(k::Level::scalar);
  CHECK(k::active_level() == k::Level::scalar);
  CHECK(std::string(k::level_name(k::Level::scalar)) == "scalar");
  if (k::supported(k::Level::avx2)) {
    k::set_level(k::Level::avx2);
    CHECK(k::active_level() == k::Level::avx2);
  } else {
    CHECK_THROWS_AS(k::set_level(k::Level::avx2), std::runtime_error);
  }
  k::set_level(before);
}
