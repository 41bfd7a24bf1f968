#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace breitrabi::cli {

enum class OutputFormat { csv, json };

/// Flat numeric table with `#`-comment metadata lines. The CSV payload is
/// numeric only, so no quoting is ever needed.
struct Table {
  std::vector<std::string> comments;  // emitted as "# ..." lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Shortest round-trip decimal rendering of a double (std::to_chars), so a
/// rerun with identical parameters is byte-identical.
std::string format_double(double x);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);

/// Writes to the path, creating parent directories.
void write_table(const Table& table, const std::filesystem::path& path,
                 OutputFormat format);

}  // namespace breitrabi::cli
