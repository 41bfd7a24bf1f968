#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "breitrabi/version.hpp"
#include "commands.hpp"

namespace {

using breitrabi::cli::RawOptions;

void add_common(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--config", raw.config_file,
                  "JSON config file; flags override its values");
  cmd->add_option("--atom", raw.atom,
                  "atom preset: hydrogen, sodium, pedagogical, "
                  "pedagogical-caption (inline atoms via --config)");
  cmd->add_option("--output,-o", raw.output, "output file path or stem");
  cmd->add_option("--format", raw.format, "csv or json (default csv)");
}

void report(const std::vector<std::filesystem::path>& files) {
  for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Breit-Rabi hyperfine spectra, crossings, entanglement and "
               "Berry phases"};
  app.set_version_flag("--version", std::string("breitrabi ") + breitrabi::kVersion);
  app.require_subcommand(1);

  RawOptions raw;
  int figure_number = 0;

  auto* levels = app.add_subcommand("levels", "energy levels E/A over a B sweep");
  add_common(levels, raw);
  levels->add_option("--B", raw.B_range, "B sweep lo:hi:n (tesla)");
  levels->add_option("--f", raw.f, "hyperfine scale factor (default 1)");
  levels->add_flag("--gnuplot", [&raw](std::int64_t) { raw.gnuplot = true; },
                   "also write a gnuplot script stub");

  auto* entropy = app.add_subcommand(
      "entropy", "per-level electron-nuclear entanglement entropy over a B sweep");
  add_common(entropy, raw);
  entropy->add_option("--B", raw.B_range, "B sweep lo:hi:n (tesla)");
  entropy->add_option("--f", raw.f, "hyperfine scale factor (default 1)");
  entropy->add_flag("--gnuplot", [&raw](std::int64_t) { raw.gnuplot = true; },
                    "also write a gnuplot script stub");

  auto* phase = app.add_subcommand(
      "phase-diagram", "ground-state gap, entropy and Berry phase over (f, B)");
  add_common(phase, raw);
  phase->add_option("--B", raw.B_range, "B grid lo:hi:n (tesla)");
  phase->add_option("--f-range", raw.f_range, "f grid lo:hi:n");

  auto* berry = app.add_subcommand(
      "berry", "marginal Berry phases over a (B, theta) grid");
  add_common(berry, raw);
  berry->add_option("--B", raw.B_range, "B grid lo:hi:n (tesla)");
  berry->add_option("--theta", raw.theta_range, "theta grid lo:hi:n (radians)");
  berry->add_option("--f", raw.f, "hyperfine scale factor (default 1)");
  berry->add_option("--level", raw.level, "level identity, e.g. m=0,- or m=+1,-");
  berry->add_flag("--numeric", [&raw](std::int64_t) { raw.numeric = true; },
                  "add Wilson-loop cross-check columns");
  berry->add_option("--steps", raw.steps, "loop steps for --numeric (default 1000)");

  auto* crossings = app.add_subcommand(
      "crossings", "real and avoided level crossings along one sweep");
  add_common(crossings, raw);
  crossings->add_option("--B", raw.B_range, "sweep B over lo:hi:n at fixed --f");
  crossings->add_option("--f-range", raw.f_range,
                        "sweep f over lo:hi:n at fixed --B-fixed");
  crossings->add_option("--f", raw.f, "fixed f for B sweeps (default 1)");
  crossings->add_option("--B-fixed", raw.B, "fixed B for f sweeps (default 0)");

  auto* figure = app.add_subcommand(
      "figure", "reproduce the data behind reference figure 1..5");
  add_common(figure, raw);
  figure->add_option("number", figure_number, "figure number (1..5)")
      ->required()
      ->check(CLI::Range(1, 5));
  figure->add_flag("--caption-params",
                   [&raw](std::int64_t) { raw.caption_params = true; },
                   "figure 2: use the swapped caption parameter set");
  figure->add_flag("--numeric", [&raw](std::int64_t) { raw.numeric = true; },
                   "figures 3/5: add Wilson-loop cross-check columns");
  figure->add_option("--steps", raw.steps, "loop steps for --numeric");

  CLI11_PARSE(app, argc, argv);

  try {
    const breitrabi::cli::RunConfig cfg = breitrabi::cli::resolve_config(raw);
    if (levels->parsed()) report(breitrabi::cli::run_levels(cfg));
    else if (entropy->parsed()) report(breitrabi::cli::run_entropy(cfg));
    else if (phase->parsed()) report(breitrabi::cli::run_phase_diagram(cfg));
    else if (berry->parsed()) report(breitrabi::cli::run_berry(cfg));
    else if (crossings->parsed()) report(breitrabi::cli::run_crossings(cfg));
    else if (figure->parsed()) report(breitrabi::cli::run_figure(figure_number, cfg));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
