#include "nbx/dynamics.hpp"

#include "nbx/kernels.hpp"
#include "nbx/rotation.hpp"
#include "nbx/su2.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace nbx {
namespace {

su2::Operator to_operator(Observable o) {
  switch (o) {
    case Observable::Jz: return su2::Operator::Jz;
    case Observable::Jx: return su2::Operator::Jx;
    case Observable::Jy: return su2::Operator::Jy;
  }
  return su2::Operator::Jz;
}

ComplexMatrix conjugate_by_u(HalfInt j, const RotationAngles& angles, const ComplexMatrix& op) {
  const ComplexMatrix u = rotation_matrix(j, angles);
  return u * (op * adjoint(u));
}

std::vector<double> energies(const ModelParams& params, HalfInt j) {
  std::vector<double> e(dimension(j));
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = params.energy(projection_at(j, k));
  return e;
}

void require_state(const EigenbasisState& state) {
  if (state.C.size() != dimension(state.j))
    throw std::invalid_argument("eigenbasis state has wrong dimension for j=" + state.j.str());
}

// Runs body(begin, end) over [0, count) in contiguous blocks.
template <typename Body>
void parallel_blocks(std::size_t count, unsigned threads, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t block = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * block;
    const std::size_t end = std::min(count, begin + block);
    if (begin >= end) break;
    pool.emplace_back([&, t, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

TimeSeries evolve_rotated(const ModelParams& params, const EigenbasisState& state,
                          const ComplexMatrix& rotated, std::span<const double> times,
                          std::string label, unsigned threads) {
  require_state(state);
  const std::size_t n = state.C.size();
  if (rotated.dim() != n) throw std::invalid_argument("observable dimension mismatch");
  const std::vector<double> e = energies(params, state.j);
  TimeSeries out{std::vector<double>(times.begin(), times.end()),
                 std::vector<double>(times.size()), std::move(label)};

  parallel_blocks(times.size(), threads, [&](std::size_t begin, std::size_t end) {
    StateVector c(n), y(n);
    for (std::size_t i = begin; i < end; ++i) {
      const double t = times[i];
      for (std::size_t k = 0; k < n; ++k) c[k] = state.C[k] * std::polar(1.0, -e[k] * t);
      kernels::complex_matvec(rotated.data(), n, n, c.data(), y.data());
      const cplx v = kernels::cdot(c.data(), y.data(), n);
      if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v.real())))
        throw std::runtime_error("expectation value has imaginary part " +
                                 std::to_string(v.imag()) + " at t=" + std::to_string(t));
      out.values[i] = v.real();
    }
  });
  return out;
}

}  // namespace

std::string_view to_string(Observable o) {
  switch (o) {
    case Observable::Jz: return "jz";
    case Observable::Jx: return "jx";
    case Observable::Jy: return "jy";
  }
  return "jz";
}

std::vector<double> time_grid(double t0, double t1, std::size_t samples) {
  if (samples < 2 || !(t1 > t0) || !std::isfinite(t0) || !std::isfinite(t1))
    throw std::invalid_argument("time grid needs t_stop > t_start and at least 2 samples");
  std::vector<double> t(samples);
  const double dt = (t1 - t0) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) t[i] = t0 + dt * static_cast<double>(i);
  t.back() = t1;
  return t;
}

EigenbasisState to_eigenbasis(const ModelParams& params, HalfInt j, std::span<const cplx> psi0) {
  if (psi0.size() != dimension(j))
    throw std::invalid_argument("initial state has wrong dimension for j=" + j.str());
  if (std::abs(norm(psi0) - 1.0) > 1e-8)
    throw std::invalid_argument("initial state is not normalized");
  return {j, apply_rotation(j, params.angles, psi0)};
}

StateVector from_eigenbasis(const ModelParams& params, const EigenbasisState& state) {
  require_state(state);
  return apply_rotation_adjoint(state.j, params.angles, state.C);
}

std::shared_ptr<const ComplexMatrix> rotated_observable(HalfInt j, const RotationAngles& angles,
                                                        Observable o) {
  using Key = std::tuple<int, std::uint64_t, std::uint64_t, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const ComplexMatrix>> cache;
  const Key key{j.twice, std::bit_cast<std::uint64_t>(angles.theta),
                std::bit_cast<std::uint64_t>(angles.phi), static_cast<int>(o)};
  std::lock_guard lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto value = std::make_shared<const ComplexMatrix>(
      conjugate_by_u(j, angles, su2::operator_matrix(j, to_operator(o))));
  cache.emplace(key, value);
  return value;
}

TimeSeries evolve_observable(const ModelParams& params, const EigenbasisState& state,
                             Observable o, std::span<const double> times, unsigned threads) {
  const auto rotated = rotated_observable(state.j, params.angles, o);
  return evolve_rotated(params, state, *rotated, times, std::string(to_string(o)), threads);
}

TimeSeries evolve_operator(const ModelParams& params, const EigenbasisState& state,
                           const ComplexMatrix& op, std::span<const double> times,
                           std::string label, unsigned threads) {
  require_state(state);
  return evolve_rotated(params, state, conjugate_by_u(state.j, params.angles, op), times,
                        std::move(label), threads);
}

TimeSeries evolve_norm(const ModelParams& params, const EigenbasisState& state,
                       std::span<const double> times) {
  require_state(state);
  const std::vector<double> e = energies(params, state.j);
  TimeSeries out{std::vector<double>(times.begin(), times.end()), {}, "norm"};
  out.values.reserve(times.size());
  for (double t : times) {
    double s = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) s += std::norm(state.C[k] * std::polar(1.0, -e[k] * t));
    out.values.push_back(s);
  }
  return out;
}

TimeSeries paper_jz_series(const ModelParams& params, const EigenbasisState& state,
                           std::span<const double> times) {
  if (params.n != 2) throw std::invalid_argument("paper_jz_series requires n = 2");
  require_state(state);
  const HalfInt j = state.j;
  const std::vector<double> e = energies(params, j);
  const double N = j.value();
  const double phi = params.angles.phi;
  const double sin_theta = std::sin(params.angles.theta);

  TimeSeries out{std::vector<double>(times.begin(), times.end()), {}, "jz_paper_formula"};
  out.values.reserve(times.size());
  for (double t : times) {
    double sum = 0.0;
    for (std::size_t k = 1; k < e.size(); ++k) {
      const double m = projection_at(j, k).value();
      const double weight = (state.C[k] * state.C[k - 1]).real();
      if (weight == 0.0) continue;
      const double L = std::cos(phi + (e[k - 1] - e[k]) * t) * (N * (N + 1.0) - m * (m - 1.0));
      sum += weight * L;
    }
    out.values.push_back(-sin_theta * sum);
  }
  return out;
}

std::optional<double> revival_time(const ModelParams& params) {
  if (params.n != 2 || params.A[2] == 0.0) return std::nullopt;
  return std::numbers::pi / std::abs(params.A[2]);
}

TimeSeries envelope_metric(const TimeSeries& series, double window) {
  const auto& t = series.times;
  if (t.size() != series.values.size())
    throw std::invalid_argument("envelope_metric: times and values differ in length");
  if (t.size() < 2) throw std::invalid_argument("envelope_metric: need at least two samples");
  double spacing = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw std::invalid_argument("envelope_metric: times not increasing");
    spacing = std::max(spacing, t[i] - t[i - 1]);
  }
  if (!(window > spacing))
    throw std::invalid_argument("envelope_metric: window must exceed the grid spacing");

  TimeSeries out{t, std::vector<double>(t.size()), series.label + "_envelope"};
  const double half = 0.5 * window;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    while (t[lo] < t[i] - half) ++lo;
    while (hi + 1 < t.size() && t[hi + 1] <= t[i] + half) ++hi;
    const auto [mn, mx] = std::minmax_element(series.values.begin() + static_cast<long>(lo),
                                              series.values.begin() + static_cast<long>(hi) + 1);
    out.values[i] = *mx - *mn;
  }
  return out;
}

}  // namespace nbx
