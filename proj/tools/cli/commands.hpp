#pragma once

#include <filesystem>
#include <vector>

#include "run_config.hpp"

namespace breitrabi::cli {

/// Each command writes its output file(s) and returns their paths.
/// Warnings (e.g. f outside [-1, 1]) go to stderr; hard errors throw.

std::vector<std::filesystem::path> run_levels(const RunConfig& cfg);
std::vector<std::filesystem::path> run_entropy(const RunConfig& cfg);
std::vector<std::filesystem::path> run_phase_diagram(const RunConfig& cfg);
std::vector<std::filesystem::path> run_berry(const RunConfig& cfg);
std::vector<std::filesystem::path> run_crossings(const RunConfig& cfg);

/// Reproduces the data behind one of the five reference figures; `output`
/// is treated as a directory. Emits a .meta.json sidecar with the exact
/// parameters, preset values, and tool version.
std::vector<std::filesystem::path> run_figure(int number, const RunConfig& cfg);

}  // namespace breitrabi::cli
