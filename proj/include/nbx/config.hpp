#pragma once

#include "nbx/diagnostics.hpp"
#include "nbx/half_int.hpp"
#include "nbx/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbx {

/// Any validation failure in a run configuration or its flag overrides.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InitialStateSpec {
  enum class Kind { dicke, rotated, amplitudes };
  Kind kind = Kind::dicke;
  std::optional<int> twice_m;  // dicke and rotated; defaults to twice_j
  std::vector<double> re, im;  // amplitudes, ascending m
};

struct EvolveSpec {
  double t_start = 0.0;
  double t_stop = 10.0;
  std::size_t samples = 1000;
  bool paper_formula = false;
  InitialStateSpec initial;
};

enum class OutputFormat { csv, json };

struct RunConfig {
  std::vector<double> A;
  double theta = 0.0;
  double phi = 0.0;
  std::optional<int> twice_j;
  EvolveSpec evolve;
  double peak_floor = 0.05;
  VerifyOptions verify;
  std::string out_path;
  OutputFormat format = OutputFormat::csv;
  unsigned threads = 1;

  /// Throws ConfigError if A is missing or the model is invalid.
  ModelParams model() const;
  /// Throws ConfigError when no spin was configured.
  HalfInt spin() const;
};

/// Flag values; set fields replace the corresponding config entries.
struct Overrides {
  std::optional<std::string> out_path;
  std::optional<std::string> format;
  std::optional<int> twice_j;
  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<std::string> A;  // "a0,a1,..."
  std::optional<std::string> convention;
  std::optional<unsigned> threads;
  std::optional<double> max_j;
  std::optional<std::uint64_t> seed;
  bool inject_fault = false;
};

/// Parses JSON config text. Unknown keys anywhere are rejected.
RunConfig parse_config(const std::string& text);

/// Reads and parses a config file. Unreadable files raise ConfigError.
RunConfig load_config(const std::string& path);

void apply_overrides(RunConfig& config, const Overrides& flags);

/// "a0,a1,..." into numbers; throws ConfigError on malformed input.
std::vector<double> parse_coefficients(const std::string& text);

OutputFormat parse_format(const std::string& text);

}  // namespace nbx
