#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fockseries::cli {

enum class PresetName { Fig1Left, Fig1Right, Fig2 };

std::string_view to_string(PresetName name) noexcept;
PresetName parse_preset(std::string_view name);

struct PresetOverrides {
  std::optional<int> steps;
  std::optional<double> alpha_min;
  std::optional<double> alpha_max;
  std::optional<double> q;    // fig2 only: its caption leaves q open
  std::optional<double> tol;  // tolerance of the adaptive curves
  unsigned threads = 0;
};

struct PresetOutput {
  std::filesystem::path manifest;
  std::vector<std::filesystem::path> curves;
};

/*!
 * Mandel-Q curves reproducing the published figures:
 *
 *   fig1-left   q = 0.5, k = 1, 2, 3 (dashed, dotted, solid), adaptive
 *   fig1-right  q = 0.8, k = 4, 6, 8 (dashed, dotted, solid), adaptive
 *   fig2        k = 3, fixed n_max = 100, 200, 400, 700 (dotted, dashed,
 *               dot-dashed, solid) plus an adaptive reference; q = 0.5 assumed
 *
 * Writes one CSV per curve and `<name>_manifest.json` into out_dir.
 */
PresetOutput run_preset(PresetName name, const std::filesystem::path& out_dir,
                        const PresetOverrides& overrides = {});

}  // namespace fockseries::cli
