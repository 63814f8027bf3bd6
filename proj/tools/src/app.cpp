#include "fockseries/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>

#include "fockseries/cli/csv.hpp"
#include "fockseries/cli/plot.hpp"
#include "fockseries/cli/preset.hpp"
#include "fockseries/cli/sweep.hpp"
#include "fockseries/error.hpp"
#include "fockseries/version.hpp"

namespace fockseries::cli {

namespace {

// Rough per-point entropy cost is D^3; warn well before a sweep gets slow.
void warn_if_costly(const SweepRequest& req) {
  if (req.observable != Observable::LinearEntropy) return;
  const double lambda = req.alpha_max * req.alpha_max * std::pow(req.q, -2.0 * req.k);
  const double dim = lambda + 10.0 * std::sqrt(lambda + 1.0) + req.k;
  if (dim > 1000.0) {
    std::cerr << "warning: linear entropy at |alpha| = " << req.alpha_max
              << " needs a per-arm dimension near " << static_cast<long>(dim)
              << "; the O(D^3) purity kernel will be slow\n";
  }
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvalidParameter:
    case ErrorCode::InvalidTheta:
    case ErrorCode::DegenerateAmplitude:
      return kExitBadArguments;
    default:
      return kExitNumericFailure;
  }
}

}  // namespace

int run_app(const std::vector<std::string>& args) {
  CLI::App app{"Photon statistics and beam-splitter entanglement of photon-added "
               "nonlinear coherent states"};
  app.set_version_flag("--version", std::string("fockseries ") + kVersion);
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate one observable on a linear |alpha| grid");
  std::string observable = "mandel_q";
  std::string nonlinearity = "penson-solomon";
  double q = 1.0;
  int k = 0;
  std::optional<double> alpha_min;
  std::optional<double> alpha_max;
  std::optional<int> steps;
  std::string policy = "adaptive:1e-14";
  double theta = std::numbers::pi / 4;
  std::string out;
  sweep->add_option("--observable", observable,
                    "mandel_q | linear_entropy | mean_n | variance | distribution")
      ->capture_default_str();
  sweep->add_option("--nonlinearity", nonlinearity, "penson-solomon | identity")
      ->capture_default_str();
  sweep->add_option("--q", q, "Penson-Solomon parameter in (0, 1]")->capture_default_str();
  sweep->add_option("--k", k, "Number of added photons")->capture_default_str();
  sweep->add_option("--alpha-min", alpha_min, "Grid start (default 0)");
  sweep->add_option("--alpha-max", alpha_max, "Grid end (default 5, or 3 for linear_entropy)");
  sweep->add_option("--steps", steps, "Grid points (default 201, or 61 for linear_entropy)");
  sweep->add_option("--policy", policy, "adaptive:<tol>[:<hard_cap>] | fixed:<n_max>")
      ->capture_default_str();
  sweep->add_option("--theta", theta, "Beam splitter angle in (0, pi/2]")->capture_default_str();
  sweep->add_option("--out", out, "Output CSV")->required();

  // preset
  auto* preset = app.add_subcommand("preset", "Write the CSVs and manifest of a figure preset");
  std::string preset_name;
  std::string out_dir;
  PresetOverrides overrides;
  preset->add_option("--name", preset_name, "fig1-left | fig1-right | fig2")->required();
  preset->add_option("--out-dir", out_dir, "Output directory")->required();
  preset->add_option("--steps", overrides.steps, "Override grid points");
  preset->add_option("--alpha-min", overrides.alpha_min, "Override grid start");
  preset->add_option("--alpha-max", overrides.alpha_max, "Override grid end");
  preset->add_option("--q", overrides.q, "Override q (fig2 only)");
  preset->add_option("--tol", overrides.tol, "Override the adaptive tolerance");

  // plot
  auto* plot = app.add_subcommand("plot", "Emit a gnuplot script for a preset manifest");
  std::string manifest;
  std::optional<std::string> script_out;
  plot->add_option("--manifest", manifest, "Manifest JSON written by `preset`")->required();
  plot->add_option("--out", script_out, "Script path (default beside the manifest)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  try {
    if (*sweep) {
      SweepRequest req = default_request(parse_observable(observable));
      req.nonlinearity = nonlinearity;
      req.q = q;
      req.k = k;
      req.alpha_min = alpha_min.value_or(req.alpha_min);
      req.alpha_max = alpha_max.value_or(req.alpha_max);
      req.steps = steps.value_or(req.steps);
      req.policy = parse_policy(policy);
      req.theta = theta;
      req.output_path = out;
      req.validate();
      warn_if_costly(req);
      const auto rows = run_sweep(req);
      const auto unconverged = std::count_if(rows.begin(), rows.end(),
                                             [](const SweepRow& r) { return !r.converged; });
      if (unconverged > 0) {
        std::cerr << "note: " << unconverged << " of " << rows.size()
                  << " rows are not certified (converged=false)\n";
      }
    } else if (*preset) {
      const auto result = run_preset(parse_preset(preset_name), out_dir, overrides);
      std::cout << result.manifest.string() << "\n";
    } else if (*plot) {
      std::optional<std::filesystem::path> target;
      if (script_out) target = *script_out;
      std::cout << emit_plot_script(manifest, target).string() << "\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace fockseries::cli
