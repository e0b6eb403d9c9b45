#include "nbx/cli.hpp"

#include "nbx/dynamics.hpp"
#include "nbx/observables.hpp"
#include "nbx/output.hpp"
#include "nbx/rotation.hpp"
#include "nbx/spectrum.hpp"

#include <cmath>
#include <iostream>

namespace nbx::cli {
namespace {

using nlohmann::json;

json angles_json(const ModelParams& p) {
  return {{"A", p.A},
          {"n", p.n},
          {"theta", p.angles.theta},
          {"phi", p.angles.phi},
          {"theta_input", p.angles.theta_input},
          {"phi_input", p.angles.phi_input}};
}

void emit(const RunConfig& config, const Table& table, const json& meta) {
  const std::string body =
      config.format == OutputFormat::csv ? to_csv(table) : to_json(table, meta);
  if (config.out_path.empty()) {
    std::cout << body;
    std::cout.flush();
    if (!std::cout) throw IoError("writing to standard output failed");
    return;
  }
  write_atomic(config.out_path, body);
}

StateVector initial_state(const RunConfig& config, const ModelParams& params, HalfInt j) {
  const InitialStateSpec& spec = config.evolve.initial;
  const std::size_t n = dimension(j);
  if (spec.kind == InitialStateSpec::Kind::amplitudes) {
    if (spec.re.size() != n)
      throw ConfigError("initial amplitudes have " + std::to_string(spec.re.size()) +
                        " entries, expected " + std::to_string(n));
    StateVector psi(n);
    for (std::size_t k = 0; k < n; ++k) psi[k] = {spec.re[k], spec.im.empty() ? 0.0 : spec.im[k]};
    if (std::abs(norm(psi) - 1.0) > 1e-8) throw ConfigError("initial amplitudes are not normalized");
    return psi;
  }
  const HalfInt m = HalfInt::from_twice(spec.twice_m.value_or(j.twice));
  if (!is_valid_projection(j, m))
    throw ConfigError("initial m=" + m.str() + " is not valid for j=" + j.str());
  if (spec.kind == InitialStateSpec::Kind::rotated) return rotated_basis_state(j, params.angles, m);
  StateVector psi(n);
  psi[basis_index(j, m)] = 1.0;
  return psi;
}

}  // namespace

int cmd_spectrum(const RunConfig& config, std::ostream& log) {
  const ModelParams params = config.model();
  const HalfInt j = config.spin();
  const auto pairs = exact_spectrum(params, j);
  Table table{{"m", "energy", "residual"}, {}};
  double worst = 0.0;
  for (const auto& p : pairs) {
    const double r = banded_residual_norm(params, j, p);
    worst = std::max(worst, r);
    table.add_row({p.m.value(), p.energy, r});
  }
  emit(config, table,
       {{"command", "spectrum"},
        {"twice_j", j.twice},
        {"model", angles_json(params)},
        {"residual_scale", energy_scale(params, j)}});
  log << "spectrum: " << pairs.size() << " eigenpairs, max residual " << format_double(worst)
      << '\n';
  return ok;
}

int cmd_ground(const RunConfig& config, std::ostream& log) {
  const ModelParams params = config.model();
  const HalfInt j = config.spin();
  const GroundStateResult g = ground_state(params, j);
  const PopulationDistribution dist = dicke_distribution(g.pair.vector);
  double total = 0.0;
  for (double p : dist.p) total += p;
  if (std::abs(total - 1.0) > 1e-10)
    throw std::runtime_error("ground distribution sums to " + format_double(total));
  const int peaks = count_peaks(dist, config.peak_floor);

  Table table{{"m", "probability", "energy", "is_m0", "degenerate"}, {}};
  for (std::size_t k = 0; k < dist.p.size(); ++k) {
    const HalfInt m = projection_at(j, k);
    table.add_row({m.value(), dist.p[k], params.energy(m), m == g.m0 ? 1.0 : 0.0,
                   g.degenerate ? 1.0 : 0.0});
  }
  emit(config, table,
       {{"command", "ground"},
        {"twice_j", j.twice},
        {"model", angles_json(params)},
        {"m0", g.m0.value()},
        {"energy", g.pair.energy},
        {"degenerate", g.degenerate},
        {"method", g.method == GroundMethod::closed_form ? "closed_form" : "scan"},
        {"peak_floor", config.peak_floor},
        {"peaks", peaks}});
  log << "ground: m0=" << g.m0.str() << " energy=" << format_double(g.pair.energy)
      << " degenerate=" << (g.degenerate ? "true" : "false") << " peaks=" << peaks << '\n';
  return ok;
}

int cmd_evolve(const RunConfig& config, std::ostream& log) {
  const ModelParams params = config.model();
  const HalfInt j = config.spin();
  if (config.evolve.paper_formula && params.n != 2)
    throw ConfigError("evolve.paper_formula requires n = 2");
  const std::vector<double> t =
      time_grid(config.evolve.t_start, config.evolve.t_stop, config.evolve.samples);
  const StateVector psi = initial_state(config, params, j);
  const EigenbasisState state = to_eigenbasis(params, j, psi);

  const TimeSeries jz = evolve_observable(params, state, Observable::Jz, t, config.threads);
  const TimeSeries jy = evolve_observable(params, state, Observable::Jy, t, config.threads);
  Table table{{"t", "jz_exact", "jy_exact"}, {}};
  std::optional<TimeSeries> printed;
  if (config.evolve.paper_formula) {
    printed = paper_jz_series(params, state, t);
    table.columns.push_back("jz_paper_formula");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<double> row{t[i], jz.values[i], jy.values[i]};
    if (printed) row.push_back(printed->values[i]);
    table.add_row(std::move(row));
  }
  const auto revival = revival_time(params);
  json meta{{"command", "evolve"}, {"twice_j", j.twice}, {"model", angles_json(params)}};
  meta["revival_time"] = revival ? json(*revival) : json(nullptr);
  emit(config, table, meta);
  log << "evolve: " << t.size() << " samples";
  if (revival) log << ", revival time " << format_double(*revival);
  log << '\n';
  return ok;
}

int cmd_verify(const RunConfig& config, std::ostream& log) {
  const VerifyReport report = run_verification(config.verify);
  json checks = json::array(), sweeps = json::array(), diags = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"kind", "REQUIRED"},
                      {"passed", c.passed},
                      {"value", c.value},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
  for (const auto& s : report.sweeps)
    sweeps.push_back({{"name", s.name},
                      {"description", s.description},
                      {"mean", s.mean},
                      {"cv", s.cv},
                      {"thetas", s.thetas},
                      {"ratios", s.ratios}});
  for (const auto& d : report.diagnostics)
    diags.push_back({{"name", d.name}, {"kind", "DIAGNOSTIC"}, {"value", d.value}, {"detail", d.detail}});
  const json out{{"command", "verify"},
                 {"seed", config.verify.seed},
                 {"max_twice_j", config.verify.max_twice_j},
                 {"draws", config.verify.draws},
                 {"inject_fault", config.verify.inject_fault},
                 {"passed", report.passed()},
                 {"checks", checks},
                 {"ratio_sweeps", sweeps},
                 {"diagnostics", diags}};
  const std::string text = out.dump(1) + '\n';
  if (!config.out_path.empty()) write_atomic(config.out_path, text);
  log << text;
  return report.passed() ? ok : check_failure;
}

int run_command(const std::string& name, const RunConfig& config, std::ostream& log,
                std::ostream& err) {
  try {
    if (name == "spectrum") return cmd_spectrum(config, log);
    if (name == "ground") return cmd_ground(config, log);
    if (name == "evolve") return cmd_evolve(config, log);
    if (name == "verify") return cmd_verify(config, log);
    err << "error: unknown command '" << name << "'\n";
    return validation_error;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return io_error;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return validation_error;
  } catch (const std::domain_error& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return validation_error;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return check_failure;
  }
}

}  // namespace nbx::cli
