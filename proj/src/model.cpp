#include "nbx/model.hpp"

#include "nbx/su2.hpp"

#include <cmath>
#include <stdexcept>

namespace nbx {
namespace {

void require_two_model(const ModelParams& params, const char* what) {
  if (params.n != 2) throw std::invalid_argument(std::string(what) + " requires n = 2");
}

void require_dim(HalfInt j, std::size_t size) {
  if (size != dimension(j))
    throw std::invalid_argument("vector dimension " + std::to_string(size) +
                                " does not match spin j=" + j.str());
}

}  // namespace

ModelParams ModelParams::make(int n, std::vector<double> A, double theta, double phi) {
  if (n < 1) throw std::invalid_argument("model order n must be >= 1");
  if (A.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("expected " + std::to_string(n + 1) + " coefficients A_0..A_" +
                                std::to_string(n) + ", got " + std::to_string(A.size()));
  for (double a : A)
    if (!std::isfinite(a)) throw std::invalid_argument("coefficients must be finite");
  return {n, std::move(A), RotationAngles::make(theta, phi)};
}

ModelParams ModelParams::make(std::vector<double> A, double theta, double phi) {
  const int n = static_cast<int>(A.size()) - 1;
  return make(n, std::move(A), theta, phi);
}

double ModelParams::energy(HalfInt m) const {
  const double x = m.value();
  double e = A.back();
  for (std::size_t i = A.size() - 1; i-- > 0;) e = e * x + A[i];
  return e;
}

ComplexMatrix diagonal_hamiltonian(const ModelParams& params, HalfInt j) {
  require_spin(j);
  ComplexMatrix h(dimension(j));
  for (std::size_t k = 0; k < h.dim(); ++k) h(k, k) = params.energy(projection_at(j, k));
  return h;
}

ComplexMatrix model_hamiltonian(const ModelParams& params, HalfInt j) {
  const ComplexMatrix h0 = diagonal_hamiltonian(params, j);
  if (params.angles.theta == 0.0 && params.angles.phi == 0.0) return h0;
  return rotate_operator(rotation_matrix(j, params.angles), h0);
}

StateVector apply_hamiltonian(const ModelParams& params, HalfInt j, std::span<const cplx> v) {
  require_dim(j, v.size());
  StateVector w = apply_rotation(j, params.angles, v);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] *= params.energy(projection_at(j, k));
  return apply_rotation_adjoint(j, params.angles, w);
}

StateVector apply_hamiltonian_banded(const ModelParams& params, HalfInt j,
                                     std::span<const cplx> v) {
  require_dim(j, v.size());
  const std::size_t n = v.size();
  const double c = std::cos(params.angles.theta);
  const double s = std::sin(params.angles.theta);
  const std::vector<double> band = su2::jx_band(j);
  auto apply_k = [&](const StateVector& x) {
    StateVector y(n);
    for (std::size_t k = 0; k < n; ++k) {
      cplx acc = c * projection_at(j, k).value() * x[k];
      if (k > 0) acc += s * band[k - 1] * x[k - 1];
      if (k + 1 < n) acc += s * band[k] * x[k + 1];
      y[k] = acc;
    }
    return y;
  };
  // Horner in K.
  StateVector out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = params.A.back() * v[k];
  for (std::size_t i = params.A.size() - 1; i-- > 0;) {
    out = apply_k(out);
    for (std::size_t k = 0; k < n; ++k) out[k] += params.A[i] * v[k];
  }
  return out;
}

RotatedJzExpansion expand_rotated_jz(HalfInt j, const RotationAngles& angles) {
  if (j.twice < 1) throw std::domain_error("expand_rotated_jz needs j >= 1/2");
  using su2::Operator;
  const ComplexMatrix jz = su2::operator_matrix(j, Operator::Jz);
  const ComplexMatrix jp = su2::operator_matrix(j, Operator::Jplus);
  const ComplexMatrix jm = su2::operator_matrix(j, Operator::Jminus);
  const ComplexMatrix rotated = rotate_operator(rotation_matrix(j, angles), jz);

  auto project = [&](const ComplexMatrix& basis) {
    cplx num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < basis.dim() * basis.dim(); ++i) {
      num += std::conj(basis.data()[i]) * rotated.data()[i];
      den += std::norm(basis.data()[i]);
    }
    return num / den;
  };
  RotatedJzExpansion out;
  out.jz = project(jz);
  out.jplus = project(jp);
  out.jminus = project(jm);
  const ComplexMatrix fit = out.jz * jz + out.jplus * jp + out.jminus * jm;
  out.residual = max_abs_difference(rotated, fit);
  return out;
}

LiteralH2 paper_literal_h2(const ModelParams& params, HalfInt j) {
  require_two_model(params, "paper_literal_h2");
  using su2::Operator;
  const ComplexMatrix jz = su2::operator_matrix(j, Operator::Jz);
  const ComplexMatrix jp = su2::operator_matrix(j, Operator::Jplus);
  const ComplexMatrix jm = su2::operator_matrix(j, Operator::Jminus);
  const double c = std::cos(params.angles.theta);
  const double s = std::sin(params.angles.theta);
  const cplx e1 = std::polar(1.0, params.angles.phi);
  const cplx e2 = std::polar(1.0, 2.0 * params.angles.phi);

  const ComplexMatrix flip = e1 * jp + std::conj(e1) * jm;
  const ComplexMatrix linear = cplx(c) * jz + cplx(s) * flip;
  const ComplexMatrix mixed = jz * flip;
  const ComplexMatrix quadratic =
      cplx(c * c) * (jz * jz) +
      cplx(s * s) * (e2 * (jp * jp) + std::conj(e2) * (jm * jm) + jp * jm + jm * jp) +
      cplx(c * s) * (mixed + adjoint(mixed));

  LiteralH2 out;
  out.matrix = cplx(params.A[1]) * linear + cplx(params.A[2]) * quadratic;
  out.max_abs_difference = max_abs_difference(out.matrix, model_hamiltonian(params, j));
  return out;
}

TwoModeCoefficients two_mode_coefficients(const ModelParams& params, int N_total) {
  require_two_model(params, "two_mode_coefficients");
  if (N_total < 0) throw std::invalid_argument("particle number must be non-negative");
  const double a1 = params.A[1], a2 = params.A[2];
  const double c = std::cos(params.angles.theta);
  const double s = std::sin(params.angles.theta);
  const double N = N_total;
  TwoModeCoefficients k;
  k.A0_const = a2 * (c * c * N * N + s * s * N);
  k.delta_omega = a1 * c;
  k.lambda = a1 * s;
  k.U_collision = a2 * (1.0 - 3.0 * c * c);
  k.mu = 2.0 * a2 * c * s;
  k.Lambda_cap = a2 * s * s;
  k.phi = params.angles.phi;
  return k;
}

SchwingerConvention parse_convention(std::string_view text) {
  if (text == "standard") return SchwingerConvention::standard;
  if (text == "paper_literal") return SchwingerConvention::paper_literal;
  throw std::invalid_argument("unknown Schwinger convention '" + std::string(text) +
                              "' (expected standard or paper_literal)");
}

std::string_view to_string(SchwingerConvention c) {
  return c == SchwingerConvention::standard ? "standard" : "paper_literal";
}

ComplexMatrix fock_hamiltonian(const TwoModeCoefficients& k, const FockSector& sector,
                               SchwingerConvention convention) {
  if (sector.N_total < 0) throw std::invalid_argument("particle number must be non-negative");
  const int N = sector.N_total;
  const std::size_t dim = sector.dim();
  ComplexMatrix h(dim);
  const double jz_scale = convention == SchwingerConvention::standard ? 0.5 : 1.0;
  const cplx e1 = std::polar(1.0, k.phi);
  const cplx e2 = std::polar(1.0, 2.0 * k.phi);

  // Index = n_a. Raising n_a by r moves to index + r.
  for (int na = 0; na <= N; ++na) {
    const int nb = N - na;
    const auto idx = static_cast<std::size_t>(na);
    const double diag = k.A0_const + k.delta_omega * jz_scale * (na - nb) +
                        k.U_collision * na * nb
                        // -mu (b^dagger a^dagger a b e^{i phi} + h.c.) = -2 mu cos(phi) n_a n_b
                        - 2.0 * k.mu * std::cos(k.phi) * na * nb;
    h(idx, idx) += diag;
    if (nb >= 1) {
      // a^dagger b |na, nb> = sqrt((na+1) nb) |na+1, nb-1>
      const double hop = std::sqrt(static_cast<double>(na + 1) * nb);
      h(idx + 1, idx) += k.lambda * e1 * hop;
      h(idx, idx + 1) += k.lambda * std::conj(e1) * hop;
      // a^dagger a^dagger a b |na, nb> = na sqrt((na+1) nb) |na+1, nb-1>
      const double dispersive = na * hop;
      h(idx + 1, idx) += k.mu * e1 * dispersive;
      h(idx, idx + 1) += k.mu * std::conj(e1) * dispersive;
    }
    if (nb >= 2) {
      // a^dagger a^dagger b b |na, nb> = sqrt((na+1)(na+2) nb (nb-1)) |na+2, nb-2>
      const double pair = std::sqrt(static_cast<double>(na + 1) * (na + 2) * nb * (nb - 1));
      h(idx + 2, idx) += k.Lambda_cap * e2 * pair;
      h(idx, idx + 2) += k.Lambda_cap * std::conj(e2) * pair;
    }
  }
  return h;
}

RateRelation rate_relation(const ModelParams& params) {
  require_two_model(params, "rate_relation");
  const TwoModeCoefficients k = two_mode_coefficients(params, 0);
  const double a1 = params.A[1], a2 = params.A[2];
  if (std::abs(k.U_collision) <= 1e-12 * std::abs(a2))
    throw std::domain_error("rate_relation: elastic coefficient U_collision vanishes");
  const double den = a1 * a1 - 3.0 * k.delta_omega * k.delta_omega;
  if (std::abs(den) <= 1e-12 * a1 * a1)
    throw std::domain_error("rate_relation: denominator A1^2 - 3 delta_omega^2 vanishes");
  return {(k.mu + k.Lambda_cap) / k.U_collision,
          0.5 * k.lambda * (k.lambda + 2.0 * k.delta_omega) / den};
}

}  // namespace nbx
