#pragma once

#include <filesystem>
#include <optional>

namespace fockseries::cli {

// Writes a gnuplot script drawing every curve listed in a preset manifest.
// Defaults to `<manifest stem>.gp` beside the manifest; returns the path.
std::filesystem::path emit_plot_script(const std::filesystem::path& manifest,
                                       const std::optional<std::filesystem::path>& out = {});

}  // namespace fockseries::cli
