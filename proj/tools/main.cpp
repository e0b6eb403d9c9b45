#include "nbx/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

void add_common(CLI::App* cmd, std::string& config_path, nbx::Overrides& o) {
  cmd->add_option("--config", config_path, "JSON run configuration");
  cmd->add_option("--out", o.out_path, "output file (standard output if omitted)");
  cmd->add_option("--format", o.format, "csv or json");
  cmd->add_option("--j", o.twice_j, "twice the spin j");
  cmd->add_option("--theta", o.theta, "rotation angle theta");
  cmd->add_option("--phi", o.phi, "rotation angle phi");
  cmd->add_option("--A", o.A, "coefficients \"a0,a1,...\"; sets n to their count minus one");
  cmd->add_option("--convention", o.convention, "standard or paper_literal");
  cmd->add_option("--threads", o.threads, "worker threads for time evolution");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra, ground states and dynamics of rotated spin models"};
  app.require_subcommand(1);
  std::string config_path;
  nbx::Overrides overrides;

  auto* spectrum = app.add_subcommand("spectrum", "closed-form eigenpairs with residuals");
  auto* ground = app.add_subcommand("ground", "ground state, population distribution, peaks");
  auto* evolve = app.add_subcommand("evolve", "exact <Jz>(t), <Jy>(t)");
  auto* verify = app.add_subcommand("verify", "oracle checks and convention factors");
  for (auto* cmd : {spectrum, ground, evolve, verify}) add_common(cmd, config_path, overrides);
  verify->add_option("--max-j", overrides.max_j, "largest j used by oracle comparisons");
  verify->add_option("--seed", overrides.seed, "random seed");
  verify->add_flag("--inject-fault", overrides.inject_fault,
                   "flip a sign in the spectrum fixture; the run must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nbx::cli::validation_error;
  }

  nbx::RunConfig config;
  try {
    if (!config_path.empty()) config = nbx::load_config(config_path);
    nbx::apply_overrides(config, overrides);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return nbx::cli::validation_error;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  std::ostream& log = name == "verify" || !config.out_path.empty() ? std::cout : std::cerr;
  return nbx::cli::run_command(name, config, log, std::cerr);
}
