#include "fockseries/cli/plot.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "fockseries/cli/csv.hpp"
#include "fockseries/error.hpp"

namespace fockseries::cli {

namespace {

// gnuplot dash types for the caption vocabulary.
int dash_type(const std::string& style) {
  if (style == "solid") return 1;
  if (style == "dashed") return 2;
  if (style == "dotted") return 3;
  if (style == "dot-dashed") return 4;
  throw Error(ErrorCode::InvalidParameter, "unknown line style '" + style + "'");
}

std::string quoted(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "''";
    else out += c;
  }
  return out + "'";
}

}  // namespace

std::filesystem::path emit_plot_script(const std::filesystem::path& manifest,
                                       const std::optional<std::filesystem::path>& out) {
  const std::string text = read_text(manifest);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw Error(ErrorCode::InvalidParameter, "manifest '" + manifest.string() + "' is empty");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidParameter, std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.contains("curves") || !doc["curves"].is_array() || doc["curves"].empty()) {
    throw Error(ErrorCode::InvalidParameter, "manifest lists no curves");
  }

  const auto dir = manifest.parent_path();
  const std::string preset = doc.value("preset", manifest.stem().string());
  const auto script = out.value_or(dir / (manifest.stem().string() + ".gp"));

  std::ostringstream gp;
  gp << "# gnuplot script generated by fockseries from " << manifest.filename().string() << "\n";
  gp << "# run from the directory holding the manifest and its CSVs\n";
  gp << "set terminal pngcairo size 900,600 enhanced\n";
  gp << "set output " << quoted(preset + ".png") << "\n";
  gp << "set datafile separator ','\n";
  gp << "set datafile commentschars '#'\n";
  gp << "set datafile columnheaders\n";
  gp << "set xlabel " << quoted(doc.value("x_label", "|alpha|")) << "\n";
  gp << "set ylabel " << quoted(doc.value("y_label", "value")) << "\n";
  gp << "set key bottom right\n";
  gp << "plot \\\n";
  const auto& curves = doc["curves"];
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    const int width = c.value("emphasis", false) ? 3 : 2;
    gp << "  " << quoted(c.at("file").get<std::string>()) << " using 1:2 with lines dt "
       << dash_type(c.at("style").get<std::string>()) << " lw " << width << " lc "
       << (i + 1) << " title " << quoted(c.at("label").get<std::string>())
       << (i + 1 < curves.size() ? ", \\\n" : "\n");
  }

  write_text(script, gp.str());
  return script;
}

}  // namespace fockseries::cli
