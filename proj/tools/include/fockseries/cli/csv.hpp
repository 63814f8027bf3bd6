#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockseries::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

/*!
 * Result table in the project's plain-text layout:
 *
 *   # fockseries v<version>
 *   # key=value            (one line per metadata entry)
 *   col_a,col_b,...
 *   row values...
 *
 * Numbers are written in the shortest form that parses back to the same
 * double; an empty field marks an undefined value.
 */
struct CsvTable {
  std::string version;
  Metadata metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Value of the metadata key, if present.
  std::optional<std::string> meta(const std::string& key) const;
  // Index of a named column; throws std::out_of_range when absent.
  std::size_t column(const std::string& name) const;
};

std::string format_double(double x);
double parse_double(const std::string& text);
std::string format_bool(bool b);
bool parse_bool(const std::string& text);

std::string to_csv_text(const CsvTable& table);
CsvTable parse_csv_text(const std::string& text);

// Throw IoError on failure.
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace fockseries::cli
