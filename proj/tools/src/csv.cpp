#include "fockseries/cli/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fockseries::cli {

namespace {

constexpr std::string_view kBanner = "# fockseries v";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_fields(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

}  // namespace

std::optional<std::string> CsvTable::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("no column named '" + name + "'");
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return value;
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

bool parse_bool(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw std::invalid_argument("not a boolean: '" + text + "'");
}

std::string to_csv_text(const CsvTable& table) {
  std::string out;
  out += kBanner;
  out += table.version;
  out += '\n';
  for (const auto& [key, value] : table.metadata) {
    out += "# " + key + "=" + value + "\n";
  }
  out += join_fields(table.columns) + "\n";
  for (const auto& row : table.rows) out += join_fields(row) + "\n";
  return out;
}

CsvTable parse_csv_text(const std::string& text) {
  CsvTable table;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind(kBanner, 0) != 0) {
    throw std::invalid_argument("missing '# fockseries v<version>' banner");
  }
  table.version = line.substr(kBanner.size());
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (line.size() < 2 || eq == std::string::npos) {
        throw std::invalid_argument("malformed metadata line '" + line + "'");
      }
      table.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
    } else if (!have_header) {
      table.columns = split_fields(line);
      have_header = true;
    } else {
      table.rows.push_back(split_fields(line));
      if (table.rows.back().size() != table.columns.size()) {
        throw std::invalid_argument("row has wrong number of fields: '" + line + "'");
      }
    }
  }
  if (!have_header) throw std::invalid_argument("missing column header");
  return table;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  write_text(path, to_csv_text(table));
}

CsvTable read_csv(const std::filesystem::path& path) { return parse_csv_text(read_text(path)); }

}  // namespace fockseries::cli
