#include "nbx/diagnostics.hpp"

#include "nbx/dynamics.hpp"
#include "nbx/rotation.hpp"
#include "nbx/spectrum.hpp"
#include "nbx/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nbx {
namespace {

constexpr double pi = std::numbers::pi;

RatioSweep summarize(std::string name, std::string description, const std::vector<double>& thetas,
                     std::vector<double> ratios) {
  RatioSweep s{std::move(name), std::move(description), thetas, std::move(ratios), 0.0, 0.0};
  double sum = 0.0;
  for (double r : s.ratios) sum += r;
  s.mean = sum / static_cast<double>(s.ratios.size());
  double var = 0.0;
  for (double r : s.ratios) var += (r - s.mean) * (r - s.mean);
  var /= static_cast<double>(s.ratios.size());
  s.cv = s.mean == 0.0 ? INFINITY : std::sqrt(var) / std::abs(s.mean);
  return s;
}

double lsq_ratio(const std::vector<double>& num, const std::vector<double>& den) {
  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    a += num[i] * den[i];
    b += den[i] * den[i];
  }
  return a / b;
}

std::vector<double> sorted_energies(const ModelParams& params, HalfInt j) {
  std::vector<double> e(dimension(j));
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = params.energy(projection_at(j, k));
  std::sort(e.begin(), e.end());
  return e;
}

double h2_linear_ratio(double theta) {
  const HalfInt j = HalfInt::from_int(3);
  const auto p = ModelParams::make({0.0, 1.0, 0.0}, theta, 0.0);
  const LiteralH2 lit = paper_literal_h2(p, j);
  const ComplexMatrix h = model_hamiltonian(p, j);
  return lit.matrix(1, 0).real() / h(1, 0).real();
}

double h2_quadratic_ratio(double theta) {
  const HalfInt j = HalfInt::from_int(3);
  const auto p = ModelParams::make({0.0, 0.0, 1.0}, theta, 0.0);
  const LiteralH2 lit = paper_literal_h2(p, j);
  const ComplexMatrix h = model_hamiltonian(p, j);
  return lit.matrix(2, 0).real() / h(2, 0).real();
}

double rate_ratio(double theta) {
  const RateRelation r = rate_relation(ModelParams::make({0.0, 1.0, 0.01}, theta, 0.0));
  return r.lhs / r.rhs;
}

double jz_series_ratio(double theta) {
  const HalfInt j = HalfInt::from_int(1);
  const auto p = ModelParams::make({0.0, 1.0, 0.0}, theta, 0.0);
  const double h = 1.0 / std::sqrt(2.0);
  const EigenbasisState state{j, {0.0, h, h}};
  const std::vector<double> t = time_grid(0.0, 20.0, 401);
  const TimeSeries exact = evolve_observable(p, state, Observable::Jz, t);
  const TimeSeries printed = paper_jz_series(p, state, t);
  double stat = 0.0;
  for (std::size_t k = 0; k < state.C.size(); ++k)
    stat += std::norm(state.C[k]) * projection_at(j, k).value();
  stat *= std::cos(p.angles.theta);
  std::vector<double> osc(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) osc[i] = exact.values[i] - stat;
  return lsq_ratio(printed.values, osc);
}

double schwinger_literal_ratio(double theta) {
  const int N = 6;
  const auto p = ModelParams::make({0.0, 1.0, 0.0}, theta, 0.0);
  const ComplexMatrix f = fock_hamiltonian(two_mode_coefficients(p, N), FockSector{N},
                                           SchwingerConvention::paper_literal);
  return lsq_ratio(brute_diagonalize(f).values, sorted_energies(p, HalfInt::from_twice(N)));
}

double schwinger_standard_hopping_ratio(double theta) {
  const int N = 6;
  const auto p = ModelParams::make({0.0, 1.0, 0.0}, theta, 0.0);
  const ComplexMatrix f = fock_hamiltonian(two_mode_coefficients(p, N), FockSector{N},
                                           SchwingerConvention::standard);
  const ComplexMatrix h = model_hamiltonian(p, HalfInt::from_twice(N));
  return f(1, 0).real() / h(1, 0).real();
}

// Phase of a cos(w t) + b sin(w t) + c fitted by least squares.
double fitted_phase(const std::vector<double>& t, const std::vector<double>& y, double w) {
  double g[3][3] = {}, r[3] = {};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double f[3] = {std::cos(w * t[i]), std::sin(w * t[i]), 1.0};
    for (int a = 0; a < 3; ++a) {
      r[a] += f[a] * y[i];
      for (int b = 0; b < 3; ++b) g[a][b] += f[a] * f[b];
    }
  }
  // 3x3 Gaussian elimination with partial pivoting.
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int a = c + 1; a < 3; ++a)
      if (std::abs(g[a][c]) > std::abs(g[piv][c])) piv = a;
    std::swap(g[c], g[piv]);
    std::swap(r[c], r[piv]);
    for (int a = c + 1; a < 3; ++a) {
      const double f = g[a][c] / g[c][c];
      for (int b = c; b < 3; ++b) g[a][b] -= f * g[c][b];
      r[a] -= f * r[c];
    }
  }
  double x[3];
  for (int a = 2; a >= 0; --a) {
    double s = r[a];
    for (int b = a + 1; b < 3; ++b) s -= g[a][b] * x[b];
    x[a] = s / g[a][a];
  }
  // a cos + b sin = R cos(w t - phase)
  return std::atan2(x[1], x[0]);
}

ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> order(1, 4);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0), theta(0.0, pi), phi(0.0, 2.0 * pi);
  const int n = order(rng);
  std::vector<double> A(static_cast<std::size_t>(n) + 1);
  for (double& a : A) a = coeff(rng);
  double th = theta(rng);
  if (th == 0.0) th = 0.5;
  return ModelParams::make(n, std::move(A), th, phi(rng));
}

StateVector random_state(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  StateVector v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  const double s = norm(v);
  for (auto& x : v) x /= s;
  return v;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

class Checker {
 public:
  explicit Checker(std::vector<CheckResult>& out) : out_(out) {}
  void add(std::string name, double worst, double tol, std::string detail = {}) {
    out_.push_back({std::move(name), worst <= tol, worst, tol, std::move(detail)});
  }

 private:
  std::vector<CheckResult>& out_;
};

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<double> default_theta_sweep() {
  std::vector<double> t(20);
  for (int k = 0; k < 20; ++k) t[static_cast<std::size_t>(k)] = 0.1 + 0.07 * k;
  return t;
}

std::vector<RatioSweep> convention_ratio_sweeps(const std::vector<double>& thetas) {
  struct Entry {
    const char* name;
    const char* description;
    double (*fn)(double);
  };
  static constexpr Entry entries[] = {
      {"h2_linear", "printed H2 / rotated model, J+ element with A2 = 0", h2_linear_ratio},
      {"h2_quadratic", "printed H2 / rotated model, J+^2 element with A1 = 0", h2_quadratic_ratio},
      {"rate_relation", "printed rate relation lhs / rhs, A1 = 1, A2 = 0.01", rate_ratio},
      {"jz_series", "printed <jz> series / exact oscillating part, j = 1, m = 1 pair",
       jz_series_ratio},
      {"schwinger_literal_spectrum", "Fock spectrum (Jz = a'a - b'b) / model spectrum, A2 = 0",
       schwinger_literal_ratio},
      {"schwinger_standard_hopping", "Fock / model first off-diagonal element, A2 = 0",
       schwinger_standard_hopping_ratio},
  };
  std::vector<RatioSweep> out;
  for (const Entry& e : entries) {
    std::vector<double> r;
    r.reserve(thetas.size());
    for (double th : thetas) r.push_back(e.fn(th));
    out.push_back(summarize(e.name, e.description, thetas, std::move(r)));
  }
  return out;
}

Diagnostic jy_jz_lag_diagnostic() {
  const HalfInt j = HalfInt::from_int(100);
  const auto p = ModelParams::make({0.0, 1.0, 0.01}, 1.5, 0.0);
  StateVector psi(dimension(j));
  psi.back() = 1.0;
  const EigenbasisState state = to_eigenbasis(p, j, psi);
  const std::vector<double> t = time_grid(0.0, 3.0, 301);
  const TimeSeries jz = evolve_observable(p, state, Observable::Jz, t);
  const TimeSeries jy = evolve_observable(p, state, Observable::Jy, t);
  const double w = std::abs(p.A[1]);
  double lag = fitted_phase(t, jy.values, w) - fitted_phase(t, jz.values, w);
  lag = std::remainder(lag, 2.0 * pi);
  return {"jy_jz_lag_quarter_periods", lag / (pi / 2.0),
          "fitted phase of <Jy> minus <Jz> at w = |A1|, t in [0, 3], fig2 recipe parameters"};
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.max_twice_j < 1 || dimension(HalfInt::from_twice(options.max_twice_j)) > brute_force_max_dim)
    throw std::invalid_argument("verify: max_twice_j must lie in [1, " +
                                std::to_string(brute_force_max_dim - 1) + "]");
  if (options.draws < 1) throw std::invalid_argument("verify: draws must be positive");

  VerifyReport report;
  Checker check(report.checks);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> twice_j_dist(0, options.max_twice_j);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);

  {
    double worst = 0.0;
    using su2::Operator;
    for (int tj = 0; tj <= options.max_twice_j; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const auto jz = su2::operator_matrix(j, Operator::Jz);
      const auto jp = su2::operator_matrix(j, Operator::Jplus);
      const auto jm = su2::operator_matrix(j, Operator::Jminus);
      const auto jx = su2::operator_matrix(j, Operator::Jx);
      const auto jy = su2::operator_matrix(j, Operator::Jy);
      const double jj = j.value() * (j.value() + 1.0);
      worst = std::max({worst, max_abs_difference(su2::commutator(jz, jp), jp),
                        max_abs_difference(su2::commutator(jz, jm), cplx(-1.0) * jm),
                        max_abs_difference(su2::commutator(jp, jm), cplx(2.0) * jz),
                        max_abs_difference(jx * jx + jy * jy + jz * jz,
                                           cplx(jj) * ComplexMatrix::identity(dimension(j)))});
    }
    check.add("su2_commutators", worst, 1e-10);
  }

  {
    double unit = 0.0, comp = 0.0;
    for (int tj = 0; tj <= options.max_twice_j; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const auto angles = RotationAngles::make(angle(rng), angle(rng));
      unit = std::max(unit, unitarity_error(rotation_matrix(j, angles)));
      const double t1 = angle(rng), t2 = angle(rng);
      comp = std::max(comp, max_abs_difference(to_complex(little_d(j, t1)) * to_complex(little_d(j, t2)),
                                               to_complex(little_d(j, t1 + t2))));
    }
    check.add("rotation_unitarity", unit, 1e-10);
    check.add("little_d_composition", comp, 1e-9);
  }

  {
    double spec = 0.0, herm = 0.0, resid = 0.0, gram = 0.0, banded = 0.0;
    const double sign = options.inject_fault ? -1.0 : 1.0;
    for (int draw = 0; draw < options.draws; ++draw) {
      const HalfInt j = HalfInt::from_twice(twice_j_dist(rng));
      const ModelParams p = random_params(rng);
      const ComplexMatrix h = model_hamiltonian(p, j);
      herm = std::max(herm, hermiticity_error(h));
      const EigenSystem bf = brute_diagonalize(h);
      std::vector<double> e = sorted_energies(p, j);
      if (sign < 0.0) {
        for (double& x : e) x = -x;
        std::sort(e.begin(), e.end());
      }
      for (std::size_t k = 0; k < e.size(); ++k) spec = std::max(spec, std::abs(bf.values[k] - e[k]));

      const auto pairs = exact_spectrum(p, j);
      const double scale = energy_scale(p, j);
      for (const auto& pr : pairs) resid = std::max(resid, residual_norm(p, j, pr) / scale);
      for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b)
          gram = std::max(gram, std::abs(inner(pairs[a].vector, pairs[b].vector) -
                                         (a == b ? cplx(1.0) : cplx(0.0))));

      const StateVector v = random_state(rng, dimension(j));
      const StateVector x = apply_hamiltonian(p, j, v);
      const StateVector y = apply_hamiltonian_banded(p, j, v);
      double d = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, std::abs(x[k] - y[k]));
      banded = std::max(banded, d / scale);
    }
    const std::string n = std::to_string(options.draws) + " draws";
    check.add("model_hermiticity", herm, 1e-10, n);
    check.add("spectrum_vs_brute_force", spec, 1e-9, n);
    check.add("eigenpair_residuals", resid, 1e-9, n + ", relative to 1 + sum |A_i| j^i");
    check.add("eigenvector_orthonormality", gram, 1e-9, n);
    check.add("apply_vs_banded_polynomial", banded, 1e-10, n);
  }

  {
    std::uniform_real_distribution<double> a(-3.0, 3.0);
    int mismatches = 0;
    const int draws = 4 * options.draws;
    for (int draw = 0; draw < draws; ++draw) {
      const HalfInt j = HalfInt::from_twice(twice_j_dist(rng));
      double a1 = a(rng), a2 = a(rng);
      switch (draw % 4) {
        case 0: a2 = std::abs(a2); break;
        case 1: a2 = std::abs(a2) * 1e-3; break;  // vertex usually outside [-j, j]
        case 2: a2 = -std::abs(a2); break;
        default: a2 = 0.0; break;
      }
      const ModelParams p = ModelParams::make({0.0, a1, a2}, 0.3, 0.0);
      const ScanResult scan = ground_state_scan(p, j);
      const HalfInt m = closed_form_ground_m(p, j);
      if (std::abs(p.energy(m) - static_cast<double>(scan.energy)) > 1e-12 * energy_scale(p, j))
        ++mismatches;
    }
    check.add("ground_state_rules", mismatches, 0.0, std::to_string(draws) + " draws");
  }

  {
    double worst = 0.0;
    for (int tj = 1; tj <= options.max_twice_j; ++tj) {
      const auto e = expand_rotated_jz(HalfInt::from_twice(tj),
                                       RotationAngles::make(angle(rng), angle(rng)));
      worst = std::max(worst, e.residual);
    }
    check.add("rotated_jz_in_span", worst, 1e-10);
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 32; ++k) {
      const auto p = ModelParams::make({0.0, 2.0 * angle(rng) / pi - 2.0, 0.3}, angle(rng), 0.0);
      const TwoModeCoefficients c = two_mode_coefficients(p, 10);
      worst = std::max(worst, std::abs(c.lambda * c.lambda + c.delta_omega * c.delta_omega -
                                       p.A[1] * p.A[1]));
    }
    check.add("two_mode_identity", worst, 1e-12, "lambda^2 + delta_omega^2 = A1^2");
  }

  report.sweeps = convention_ratio_sweeps(default_theta_sweep());
  for (const auto& s : report.sweeps)
    check.add("ratio_constant:" + s.name, s.cv, ratio_cv_limit, "mean " + fmt(s.mean));

  for (const auto& s : report.sweeps)
    report.diagnostics.push_back({"factor:" + s.name, s.mean, s.description});
  report.diagnostics.push_back({"factor:jz_series_expected", std::sqrt(2.0),
                                "sqrt(j(j+1) - m(m-1)) at j = 1, m = 1"});

  {
    const HalfInt j = HalfInt::from_int(3);
    const auto p = ModelParams::make({0.0, 0.7, 0.3}, 1.1, 0.4);
    report.diagnostics.push_back({"h2_literal_max_abs_difference",
                                  paper_literal_h2(p, j).max_abs_difference,
                                  "A = [0, 0.7, 0.3], theta = 1.1, phi = 0.4, j = 3"});
    const ComplexMatrix f = fock_hamiltonian(two_mode_coefficients(p, 6), FockSector{6},
                                             options.convention);
    const EigenSystem fs = brute_diagonalize(f);
    const std::vector<double> e = sorted_energies(p, j);
    double d = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) d = std::max(d, std::abs(fs.values[k] - e[k]));
    report.diagnostics.push_back({"fock_spectrum_max_deviation", d,
                                  std::string("convention ") +
                                      std::string(to_string(options.convention)) +
                                      ", N = 6 against j = 3, same parameters"});
  }
  report.diagnostics.push_back(jy_jz_lag_diagnostic());
  return report;
}

}  // namespace nbx
