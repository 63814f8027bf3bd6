#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockseries/cli/csv.hpp"
#include "fockseries/series.hpp"
#include "fockseries/state.hpp"

namespace fockseries::cli {

enum class Observable { MandelQ, LinearEntropy, MeanN, Variance, Distribution };

std::string_view to_string(Observable obs) noexcept;
Observable parse_observable(std::string_view name);

/// One |alpha| sweep of a single observable.
struct SweepRequest {
  Observable observable = Observable::MandelQ;
  std::string nonlinearity = "penson-solomon";
  double q = 1.0;
  int k = 0;
  double alpha_min = 0.0;
  double alpha_max = 5.0;
  int steps = 201;
  TruncationPolicy policy = AdaptiveTolerance{};
  double theta = std::numbers::pi / 4;
  std::filesystem::path output_path;
  unsigned threads = 0;  // 0: FOCKSERIES_THREADS or hardware concurrency

  // Throws fockseries::Error(InvalidParameter / InvalidTheta).
  void validate() const;
  NonlinearityModel model() const;
};

// Grid defaults: 201 points on [0, 5] for photon statistics, 61 on [0, 3]
// for the linear entropy.
SweepRequest default_request(Observable obs);

struct SweepRow {
  double alpha = 0.0;
  std::optional<std::int64_t> photon_number;  // distribution rows only
  std::optional<double> value;                // empty: undefined (vacuum Mandel Q)
  std::size_t n_max_used = 0;
  double tail_bound_rel = 0.0;
  bool converged = true;
};

// Linear and inclusive of both endpoints.
std::vector<double> alpha_grid(double alpha_min, double alpha_max, int steps);

// Rows for a single |alpha|; several for the distribution observable.
std::vector<SweepRow> evaluate_point(const SweepRequest& req, double alpha);

// Every grid point, in grid order. Points may be evaluated concurrently.
std::vector<SweepRow> evaluate_sweep(const SweepRequest& req);

Metadata sweep_metadata(const SweepRequest& req);
CsvTable sweep_table(const SweepRequest& req, const std::vector<SweepRow>& rows,
                     const Metadata& extra = {});

// Rebuilds the request a CSV was produced from (grid and output path aside).
SweepRequest request_from_table(const CsvTable& table);
std::vector<SweepRow> rows_from_table(const CsvTable& table);

// Evaluate and write req.output_path.
std::vector<SweepRow> run_sweep(const SweepRequest& req, const Metadata& extra = {});

}  // namespace fockseries::cli
