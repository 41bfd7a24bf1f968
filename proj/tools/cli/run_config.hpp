#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "breitrabi/atom.hpp"
#include "breitrabi/spectra.hpp"
#include "table.hpp"

namespace breitrabi::cli {

/// Inclusive range "lo:hi:n" with n grid points.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;
};

std::optional<Range> parse_range(const std::string& text);

/// Everything a command needs, merged from (lowest to highest precedence)
/// built-in defaults, a JSON config file, and command-line flags.
struct RunConfig {
  AtomParams atom;
  std::optional<Range> B_range;
  std::optional<Range> f_range;
  std::optional<Range> theta_range;
  double f = 1.0;       // fixed hyperfine scale for B sweeps
  double B = 0.0;       // fixed field for f sweeps
  std::optional<LevelId> level;
  OutputFormat format = OutputFormat::csv;
  std::filesystem::path output;
  bool numeric = false;   // add Wilson-loop cross-check columns
  int steps = 1000;       // loop discretization for --numeric
  bool gnuplot = false;   // also drop a plotting script stub
  bool caption_params = false;  // figure 2: swapped parameter set
};

/// Raw option values as strings, before resolution. Flags left unset fall
/// back to the config file and then to defaults.
struct RawOptions {
  std::optional<std::string> config_file;
  std::optional<std::string> atom;
  std::optional<std::string> B_range;
  std::optional<std::string> f_range;
  std::optional<std::string> theta_range;
  std::optional<double> f;
  std::optional<double> B;
  std::optional<std::string> level;
  std::optional<std::string> format;
  std::optional<std::string> output;
  std::optional<bool> numeric;
  std::optional<int> steps;
  std::optional<bool> gnuplot;
  std::optional<bool> caption_params;
};

/// Resolves options into a RunConfig: loads the JSON config file when given,
/// applies flag overrides, resolves the atom (preset name or inline
/// definition), and applies the BREITRABI_OUTDIR environment override to
/// relative output paths. Throws std::runtime_error with a user-facing
/// message on bad input.
RunConfig resolve_config(const RawOptions& raw);

/// Parses "1/2", "3/2", "2" or a numeric value into a half-integer.
std::optional<HalfInteger> parse_half_integer(const std::string& text);

}  // namespace breitrabi::cli
