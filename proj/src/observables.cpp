#include "nbx/observables.hpp"

#include "nbx/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbx {

PopulationDistribution dicke_distribution(std::span<const cplx> psi) {
  if (psi.empty()) throw std::invalid_argument("empty state vector");
  if (std::abs(norm(psi) - 1.0) > 1e-8)
    throw std::invalid_argument("state vector is not normalized");
  PopulationDistribution out{HalfInt::from_twice(static_cast<int>(psi.size()) - 1), {}};
  out.p.reserve(psi.size());
  for (const cplx& a : psi) {
    double p = std::norm(a);
    if (p < 0.0) p = 0.0;
    out.p.push_back(p);
  }
  return out;
}

PopulationDistribution ground_distribution(const ModelParams& params, HalfInt j) {
  return dicke_distribution(ground_state(params, j).pair.vector);
}

int count_peaks(const PopulationDistribution& dist, double floor) {
  if (!(floor >= 0.0 && floor < 1.0))
    throw std::invalid_argument("peak floor must lie in [0, 1)");
  const auto& p = dist.p;
  if (p.empty()) return 0;
  const double pmax = *std::max_element(p.begin(), p.end());
  if (!(pmax > 0.0)) throw std::invalid_argument("distribution has no positive entry");
  const double threshold = floor * pmax;

  int peaks = 0;
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t end = i;
    while (end + 1 < p.size() && p[end + 1] == p[i]) ++end;
    const bool left_lower = i == 0 || p[i - 1] < p[i];
    const bool right_lower = end + 1 == p.size() || p[end + 1] < p[i];
    if (left_lower && right_lower && p[i] >= threshold) ++peaks;
    i = end + 1;
  }
  return peaks;
}

}  // namespace nbx
