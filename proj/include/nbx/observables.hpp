#pragma once

#include "nbx/half_int.hpp"
#include "nbx/matrix.hpp"
#include "nbx/model.hpp"

#include <span>
#include <vector>

namespace nbx {

struct PopulationDistribution {
  HalfInt j;
  std::vector<double> p;  // ascending m
};

/// p_m = |psi_m|^2. Throws std::invalid_argument unless |psi| = 1 (1e-8) and
/// the length is 2j+1 for some j. Values below zero from rounding are clamped.
PopulationDistribution dicke_distribution(std::span<const cplx> psi);

/// Distribution of the ground-state vector U^dagger |j, m0>.
PopulationDistribution ground_distribution(const ModelParams& params, HalfInt j);

/// Interior local maxima with p >= floor * max(p); a plateau counts once.
/// Positions outside the array count as lower neighbours, so a maximum on
/// an edge is counted. Throws std::invalid_argument unless 0 <= floor < 1.
int count_peaks(const PopulationDistribution& dist, double floor);

}  // namespace nbx
