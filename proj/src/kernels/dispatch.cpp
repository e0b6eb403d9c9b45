#include "nbx/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace nbx::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(NBX_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Level detect() {
  if (const char* env = std::getenv("NBX_KERNELS"); env && std::string_view(env) == "scalar")
    return Level::scalar;
  return cpu_has_avx2() ? Level::avx2 : Level::scalar;
}

std::atomic<Level>& level_slot() {
  static std::atomic<Level> level{detect()};
  return level;
}

}  // namespace

bool supported(Level level) { return level == Level::scalar || cpu_has_avx2(); }

Level active_level() { return level_slot().load(std::memory_order_relaxed); }

const char* level_name(Level level) { return level == Level::avx2 ? "avx2" : "scalar"; }

void set_level(Level level) {
  if (!supported(level))
    throw std::runtime_error(std::string("kernel level not supported: ") + level_name(level));
  level_slot().store(level, std::memory_order_relaxed);
}

#if defined(NBX_HAVE_AVX2)
#define NBX_DISPATCH(fn, ...) \
  (active_level() == Level::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define NBX_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double dot(const double* a, const double* b, std::size_t n) { return NBX_DISPATCH(dot, a, b, n); }

double weighted_dot(const double* a, const double* b, const double* w, std::size_t n) {
  return NBX_DISPATCH(weighted_dot, a, b, w, n);
}

std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n) {
  return NBX_DISPATCH(cdot, a, b, n);
}

void real_matvec(const double* a, std::size_t rows, std::size_t cols,
                 const std::complex<double>* x, std::complex<double>* y) {
  NBX_DISPATCH(real_matvec, a, rows, cols, x, y);
}

void complex_matvec(const std::complex<double>* a, std::size_t rows, std::size_t cols,
                    const std::complex<double>* x, std::complex<double>* y) {
  NBX_DISPATCH(complex_matvec, a, rows, cols, x, y);
}

#undef NBX_DISPATCH

#if !defined(NBX_HAVE_AVX2)
// Non-x86 builds: the avx2 namespace forwards to the reference kernels so the
// equivalence tests still link.
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n) { return scalar::dot(a, b, n); }
double weighted_dot(const double* a, const double* b, const double* w, std::size_t n) {
  return scalar::weighted_dot(a, b, w, n);
}
std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n) {
  return scalar::cdot(a, b, n);
}
void real_matvec(const double* a, std::size_t rows, std::size_t cols,
                 const std::complex<double>* x, std::complex<double>* y) {
  scalar::real_matvec(a, rows, cols, x, y);
}
void complex_matvec(const std::complex<double>* a, std::size_t rows, std::size_t cols,
                    const std::complex<double>* x, std::complex<double>* y) {
  scalar::complex_matvec(a, rows, cols, x, y);
}
}  // namespace avx2
#endif

}  // namespace nbx::kernels
