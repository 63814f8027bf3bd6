#include "fockseries/cli/preset.hpp"

#include <nlohmann/json.hpp>

#include "fockseries/cli/csv.hpp"
#include "fockseries/cli/sweep.hpp"
#include "fockseries/error.hpp"
#include "fockseries/version.hpp"

namespace fockseries::cli {

namespace {

struct Curve {
  std::string file;
  std::string label;
  std::string style;
  SweepRequest request;
  bool emphasis = false;  // drawn heavier than the other curves
};

// Figure 2's caption gives k and the cutoffs but not q.
constexpr double kFig2AssumedQ = 0.5;

SweepRequest base_request(double q, int k, const PresetOverrides& o) {
  SweepRequest req = default_request(Observable::MandelQ);
  req.q = q;
  req.k = k;
  req.alpha_min = o.alpha_min.value_or(req.alpha_min);
  req.alpha_max = o.alpha_max.value_or(req.alpha_max);
  req.steps = o.steps.value_or(req.steps);
  req.policy = AdaptiveTolerance{o.tol.value_or(kDefaultRelTol)};
  req.threads = o.threads;
  return req;
}

std::vector<Curve> fig1_curves(std::string_view name, double q, const int (&ks)[3],
                               const PresetOverrides& o) {
  static constexpr const char* kStyles[3] = {"dashed", "dotted", "solid"};
  std::vector<Curve> curves;
  for (int i = 0; i < 3; ++i) {
    curves.push_back({std::string(name) + "_k" + std::to_string(ks[i]) + ".csv",
                      "k=" + std::to_string(ks[i]), kStyles[i], base_request(q, ks[i], o)});
  }
  return curves;
}

std::vector<Curve> fig2_curves(const PresetOverrides& o) {
  const double q = o.q.value_or(kFig2AssumedQ);
  static constexpr std::size_t kCutoffs[4] = {100, 200, 400, 700};
  static constexpr const char* kStyles[4] = {"dotted", "dashed", "dot-dashed", "solid"};
  std::vector<Curve> curves;
  for (int i = 0; i < 4; ++i) {
    auto req = base_request(q, 3, o);
    req.policy = FixedCutoff{kCutoffs[i]};
    curves.push_back({"fig2_nmax" + std::to_string(kCutoffs[i]) + ".csv",
                      "n_max=" + std::to_string(kCutoffs[i]), kStyles[i], req});
  }
  curves.push_back({"fig2_adaptive.csv", "adaptive", "solid", base_request(q, 3, o), true});
  return curves;
}

}  // namespace

std::string_view to_string(PresetName name) noexcept {
  switch (name) {
    case PresetName::Fig1Left: return "fig1-left";
    case PresetName::Fig1Right: return "fig1-right";
    case PresetName::Fig2: return "fig2";
  }
  return "unknown";
}

PresetName parse_preset(std::string_view name) {
  for (auto p : {PresetName::Fig1Left, PresetName::Fig1Right, PresetName::Fig2}) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorCode::InvalidParameter, "unknown preset '" + std::string(name) + "'");
}

PresetOutput run_preset(PresetName name, const std::filesystem::path& out_dir,
                        const PresetOverrides& overrides) {
  if (overrides.q && name != PresetName::Fig2) {
    throw Error(ErrorCode::InvalidParameter, "q is fixed by the fig1 presets");
  }

  std::vector<Curve> curves;
  switch (name) {
    case PresetName::Fig1Left: curves = fig1_curves("fig1-left", 0.5, {1, 2, 3}, overrides); break;
    case PresetName::Fig1Right: curves = fig1_curves("fig1-right", 0.8, {4, 6, 8}, overrides); break;
    case PresetName::Fig2: curves = fig2_curves(overrides); break;
  }
  for (const auto& c : curves) c.request.validate();

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

  const std::string preset(to_string(name));
  Metadata extra{{"preset", preset}};
  if (name == PresetName::Fig2 && !overrides.q) {
    extra.emplace_back("assumed_q", "0.5 (figure caption does not state q)");
  }

  nlohmann::ordered_json manifest;
  manifest["generator"] = "fockseries";
  manifest["version"] = kVersion;
  manifest["preset"] = preset;
  manifest["observable"] = "mandel_q";
  manifest["x_label"] = "|alpha|";
  manifest["y_label"] = "Q";
  manifest["grid"] = {{"alpha_min", curves.front().request.alpha_min},
                      {"alpha_max", curves.front().request.alpha_max},
                      {"steps", curves.front().request.steps}};
  manifest["assumptions"] = nlohmann::ordered_json::array();
  if (name == PresetName::Fig2) {
    manifest["assumptions"].push_back(
        overrides.q ? "q overridden on the command line"
                    : "q = 0.5 assumed: the figure caption fixes k = 3 but not q");
  }
  manifest["curves"] = nlohmann::ordered_json::array();

  PresetOutput out;
  for (auto& curve : curves) {
    curve.request.output_path = out_dir / curve.file;
    Metadata curve_meta = extra;
    curve_meta.emplace_back("curve", curve.label);
    run_sweep(curve.request, curve_meta);
    out.curves.push_back(curve.request.output_path);

    nlohmann::ordered_json entry;
    entry["file"] = curve.file;
    entry["label"] = curve.label;
    entry["style"] = curve.style;
    entry["emphasis"] = curve.emphasis;
    entry["nonlinearity"] = curve.request.nonlinearity;
    entry["q"] = curve.request.q;
    entry["k"] = curve.request.k;
    entry["policy"] = format_policy(curve.request.policy);
    manifest["curves"].push_back(entry);
  }

  out.manifest = out_dir / (preset + "_manifest.json");
  write_text(out.manifest, manifest.dump(2) + "\n");
  return out;
}

}  // namespace fockseries::cli
