#pragma once

#include <map>
#include <optional>
#include <string>

#include "gapspec/medium.hpp"

namespace gapspec::cli {

/// Full run configuration: medium parameters (absolute or already
/// normalized), subcommand arguments, and output controls.  Loaded from a
/// flat `key = value` file (# comments) with flag overrides on top; flags
/// win over the file, and GAPSPEC_THREADS wins for the parallelism degree.
struct RunConfig {
  // medium (absolute units allowed; normalized on use)
  double omega_perp = 1.0;
  double omega_par = 1.2;
  double omega12 = 1.1;
  double beta = 1e-3;
  std::optional<double> L;
  double edge_guard_frac = 1e-6;
  double lamb_shift = 0.0;

  // subcommand arguments
  int l = 1;
  int n_particles = 1;
  double H = 0.0;
  std::string mode = "linear";  // linear | corrected | exact
  int points = 100;
  double h_min = 0.0;
  std::optional<double> h_max;

  // output
  std::string format = "csv";  // csv | json
  std::string output;          // empty = stdout
  int threads = 1;

  /// Params in the units given (validated); normalize with .normalized().
  MediumParams medium() const;

  /// Unit scale: one normalized frequency unit in absolute input units.
  double unit_scale() const { return omega_perp; }

  bool operator==(const RunConfig&) const = default;
};

/// Parses flat `key = value` text; throws ConfigError naming the offending
/// key and line on unknown keys, bad values, or syntax errors.
RunConfig parse_config_text(const std::string& text, const RunConfig& base = {});

RunConfig load_config_file(const std::string& path, const RunConfig& base = {});

/// Emits the full key set; parse_config_text(serialize(c)) == c.
std::string serialize(const RunConfig& c);

}  // namespace gapspec::cli
