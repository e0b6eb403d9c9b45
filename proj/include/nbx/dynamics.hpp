#pragma once

// Exact evolution through the closed-form eigenbasis:
//   <O>(t) = c(t)^dagger (U O U^dagger) c(t),  c_m(t) = C_m exp(-i E_m t),
// with the rotated observable computed once per (j, angles, observable).

#include "nbx/half_int.hpp"
#include "nbx/matrix.hpp"
#include "nbx/model.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nbx {

struct EigenbasisState {
  HalfInt j;
  std::vector<cplx> C;  // state = sum_m C_m U^dagger |j, m>, ascending m
};

struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;
  std::string label;
};

enum class Observable { Jz, Jx, Jy };

std::string_view to_string(Observable o);

/// Evenly spaced grid of `samples` points from t0 to t1 inclusive.
std::vector<double> time_grid(double t0, double t1, std::size_t samples);

/// C_m = <j, m| U |psi0>. Throws std::invalid_argument unless |psi0| = 1 (1e-8).
EigenbasisState to_eigenbasis(const ModelParams& params, HalfInt j, std::span<const cplx> psi0);

/// sum_m C_m U^dagger |j, m>.
StateVector from_eigenbasis(const ModelParams& params, const EigenbasisState& state);

/// U O U^dagger for a spin observable, cached by (j, theta, phi, O).
std::shared_ptr<const ComplexMatrix> rotated_observable(HalfInt j, const RotationAngles& angles,
                                                        Observable o);

/// Evaluates <O>(t) on each time point. Time points are independent; with
/// threads > 1 they are split into contiguous blocks and the result does not
/// depend on the thread count. Throws std::runtime_error if an expectation
/// has an imaginary part above 1e-9 (1 + |value|).
TimeSeries evolve_observable(const ModelParams& params, const EigenbasisState& state,
                             Observable o, std::span<const double> times, unsigned threads = 1);

/// Same for an arbitrary operator given in the Dicke basis.
TimeSeries evolve_operator(const ModelParams& params, const EigenbasisState& state,
                           const ComplexMatrix& op, std::span<const double> times,
                           std::string label, unsigned threads = 1);

/// sum_m |C_m(t)|^2 at every time point.
TimeSeries evolve_norm(const ModelParams& params, const EigenbasisState& state,
                       std::span<const double> times);

/// The printed relative-population series
///   -sin(theta) sum_{m=-N+1}^{N} C_m C_{m-1} L_m,
///   L_m = cos(phi + (E_{m-1} - E_m) t) (N(N+1) - m(m-1)),
/// with N read as j (m runs over -N..N in that sum) and the C products taken
/// without conjugation; the real part of the product is used.
/// Requires n == 2.
TimeSeries paper_jz_series(const ModelParams& params, const EigenbasisState& state,
                           std::span<const double> times);

/// pi / |A_2| for n = 2 with A_2 != 0; nullopt otherwise.
std::optional<double> revival_time(const ModelParams& params);

/// Max minus min of the series over a centred window of the given width,
/// clipped at the ends. Throws std::invalid_argument when the window is not
/// wider than the grid spacing.
TimeSeries envelope_metric(const TimeSeries& series, double window);

}  // namespace nbx
