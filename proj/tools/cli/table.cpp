#include "table.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace breitrabi::cli {

std::string format_double(double x) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

void write_csv(const Table& table, std::ostream& os) {
  for (const auto& c : table.comments) os << "# " << c << "\n";
  os << "# columns: ";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << ",";
    os << table.columns[i];
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << format_double(row[i]);
    }
    os << "\n";
  }
}

void write_json(const Table& table, std::ostream& os) {
  nlohmann::json j;
  j["comments"] = table.comments;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  os << j.dump(2) << "\n";
}

void write_table(const Table& table, const std::filesystem::path& path,
                 OutputFormat format) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os)
    throw std::runtime_error("cannot open output file " + path.string());
  if (format == OutputFormat::csv)
    write_csv(table, os);
  else
    write_json(table, os);
  if (!os) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace breitrabi::cli
