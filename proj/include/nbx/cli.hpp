#pragma once

#include "nbx/config.hpp"

#include <iosfwd>
#include <string>

namespace nbx::cli {

enum ExitCode : int { ok = 0, validation_error = 2, check_failure = 3, io_error = 4 };

// Each command validates the config, computes, then writes the output file
// (CSV or JSON) in one atomic step. A one-line summary goes to `log`.
// Exceptions propagate; run_command maps them to exit codes.
int cmd_spectrum(const RunConfig& config, std::ostream& log);
int cmd_ground(const RunConfig& config, std::ostream& log);
int cmd_evolve(const RunConfig& config, std::ostream& log);
int cmd_verify(const RunConfig& config, std::ostream& log);

/// Dispatches by name and converts errors: ConfigError and other
/// invalid-argument/domain errors -> 2, IoError -> 4, any other failure -> 3.
/// Messages go to `err`.
int run_command(const std::string& name, const RunConfig& config, std::ostream& log,
                std::ostream& err);

}  // namespace nbx::cli
