#include "fockseries/cli/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "fockseries/cli/parallel.hpp"
#include "fockseries/entangle.hpp"
#include "fockseries/error.hpp"
#include "fockseries/statistics.hpp"
#include "fockseries/version.hpp"

namespace fockseries::cli {

namespace {

const std::vector<std::string> kColumns = {"alpha", "value", "n_max_used", "tail_bound_rel",
                                           "converged"};
const std::vector<std::string> kDistributionColumns = {
    "alpha", "photon_number", "value", "n_max_used", "tail_bound_rel", "converged"};

double certification_tol(const TruncationPolicy& policy) {
  if (const auto* adaptive = std::get_if<AdaptiveTolerance>(&policy)) return adaptive->rel_tol;
  return kDefaultRelTol;
}

std::string required_meta(const CsvTable& table, const std::string& key) {
  auto value = table.meta(key);
  if (!value) throw Error(ErrorCode::InvalidParameter, "CSV lacks metadata '" + key + "'");
  return *value;
}

}  // namespace

unsigned resolve_threads(unsigned requested, std::size_t tasks) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("FOCKSERIES_THREADS")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed > 0) n = static_cast<unsigned>(parsed);
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  if (tasks < n) n = static_cast<unsigned>(std::max<std::size_t>(tasks, 1));
  return n;
}

std::string_view to_string(Observable obs) noexcept {
  switch (obs) {
    case Observable::MandelQ: return "mandel_q";
    case Observable::LinearEntropy: return "linear_entropy";
    case Observable::MeanN: return "mean_n";
    case Observable::Variance: return "variance";
    case Observable::Distribution: return "distribution";
  }
  return "unknown";
}

Observable parse_observable(std::string_view name) {
  for (auto obs : {Observable::MandelQ, Observable::LinearEntropy, Observable::MeanN,
                   Observable::Variance, Observable::Distribution}) {
    if (to_string(obs) == name) return obs;
  }
  throw Error(ErrorCode::InvalidParameter, "unknown observable '" + std::string(name) + "'");
}

NonlinearityModel SweepRequest::model() const { return NonlinearityModel::from_name(nonlinearity, q); }

void SweepRequest::validate() const {
  model();
  if (k < 0) throw Error(ErrorCode::InvalidParameter, "k must be nonnegative");
  if (!std::isfinite(alpha_min) || !std::isfinite(alpha_max) || alpha_min < 0.0) {
    throw Error(ErrorCode::InvalidParameter, "alpha range must be finite and nonnegative");
  }
  if (alpha_min > alpha_max) {
    throw Error(ErrorCode::InvalidParameter, "alpha_min must not exceed alpha_max");
  }
  if (steps < 2) throw Error(ErrorCode::InvalidParameter, "steps must be at least 2");
  fockseries::validate(policy);
  BeamSplitterSetting{theta}.validate();
}

SweepRequest default_request(Observable obs) {
  SweepRequest req;
  req.observable = obs;
  if (obs == Observable::LinearEntropy) {
    req.alpha_max = 3.0;
    req.steps = 61;
  }
  return req;
}

std::vector<double> alpha_grid(double alpha_min, double alpha_max, int steps) {
  if (steps < 2) throw Error(ErrorCode::InvalidParameter, "steps must be at least 2");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double span = alpha_max - alpha_min;
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] = alpha_min + span * i / (steps - 1);
  }
  grid.back() = alpha_max;
  return grid;
}

std::vector<SweepRow> evaluate_point(const SweepRequest& req, double alpha) {
  const StateSpec spec{alpha, 0.0, req.k, req.model()};
  const auto series = truncate(spec, req.policy);

  SweepRow base;
  base.alpha = alpha;
  base.n_max_used = series.n_max();
  base.tail_bound_rel = series.tail_bound_rel;
  base.converged = series.converged;

  const bool vacuum = spec.k == 0 && spec.alpha_abs == 0.0;
  switch (req.observable) {
    case Observable::MandelQ: {
      if (vacuum) {
        base.converged = false;
        return {base};
      }
      base.value = photon_statistics(series, spec).mandel_q;
      return {base};
    }
    case Observable::MeanN:
      base.value = vacuum ? 0.0 : photon_statistics(series, spec).mean_n;
      return {base};
    case Observable::Variance:
      base.value = vacuum ? 0.0 : photon_statistics(series, spec).variance;
      return {base};
    case Observable::LinearEntropy: {
      SplitOptions options;
      options.allow_unconverged = true;
      base.value = linear_entropy(series, spec, BeamSplitterSetting{req.theta}, options)
                       .linear_entropy;
      return {base};
    }
    case Observable::Distribution: {
      std::vector<SweepRow> rows;
      for (const auto& [photons, p] : photon_distribution(series, spec)) {
        SweepRow row = base;
        row.photon_number = photons;
        row.value = p;
        rows.push_back(row);
      }
      return rows;
    }
  }
  return {base};
}

std::vector<SweepRow> evaluate_sweep(const SweepRequest& req) {
  req.validate();
  const auto grid = alpha_grid(req.alpha_min, req.alpha_max, req.steps);
  std::vector<std::vector<SweepRow>> per_point(grid.size());
  parallel_for(grid.size(), req.threads,
               [&](std::size_t i) { per_point[i] = evaluate_point(req, grid[i]); });
  std::vector<SweepRow> rows;
  for (auto& point : per_point) rows.insert(rows.end(), point.begin(), point.end());
  return rows;
}

Metadata sweep_metadata(const SweepRequest& req) {
  return {
      {"observable", std::string(to_string(req.observable))},
      {"nonlinearity", req.nonlinearity},
      {"q", format_double(req.q)},
      {"k", std::to_string(req.k)},
      {"policy", format_policy(req.policy)},
      {"tol", format_double(certification_tol(req.policy))},
      {"theta", format_double(req.theta)},
      {"alpha_min", format_double(req.alpha_min)},
      {"alpha_max", format_double(req.alpha_max)},
      {"steps", std::to_string(req.steps)},
  };
}

CsvTable sweep_table(const SweepRequest& req, const std::vector<SweepRow>& rows,
                     const Metadata& extra) {
  CsvTable table;
  table.version = kVersion;
  table.metadata = sweep_metadata(req);
  table.metadata.insert(table.metadata.end(), extra.begin(), extra.end());
  const bool distribution = req.observable == Observable::Distribution;
  table.columns = distribution ? kDistributionColumns : kColumns;
  for (const auto& row : rows) {
    std::vector<std::string> fields{format_double(row.alpha)};
    if (distribution) fields.push_back(std::to_string(row.photon_number.value_or(0)));
    fields.push_back(row.value ? format_double(*row.value) : std::string{});
    fields.push_back(std::to_string(row.n_max_used));
    fields.push_back(format_double(row.tail_bound_rel));
    fields.push_back(format_bool(row.converged));
    table.rows.push_back(std::move(fields));
  }
  return table;
}

SweepRequest request_from_table(const CsvTable& table) {
  SweepRequest req;
  try {
    req.observable = parse_observable(required_meta(table, "observable"));
    req.nonlinearity = required_meta(table, "nonlinearity");
    req.q = parse_double(required_meta(table, "q"));
    req.k = std::stoi(required_meta(table, "k"));
    req.policy = parse_policy(required_meta(table, "policy"));
    req.theta = parse_double(required_meta(table, "theta"));
    if (auto v = table.meta("alpha_min")) req.alpha_min = parse_double(*v);
    if (auto v = table.meta("alpha_max")) req.alpha_max = parse_double(*v);
    if (auto v = table.meta("steps")) req.steps = std::stoi(*v);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::InvalidParameter, std::string("bad CSV metadata: ") + e.what());
  }
  return req;
}

std::vector<SweepRow> rows_from_table(const CsvTable& table) {
  const auto has_photons = table.columns.size() == kDistributionColumns.size();
  std::vector<SweepRow> rows;
  for (const auto& fields : table.rows) {
    SweepRow row;
    row.alpha = parse_double(fields[table.column("alpha")]);
    if (has_photons) row.photon_number = std::stoll(fields[table.column("photon_number")]);
    const auto& value = fields[table.column("value")];
    if (!value.empty()) row.value = parse_double(value);
    row.n_max_used = std::stoull(fields[table.column("n_max_used")]);
    row.tail_bound_rel = parse_double(fields[table.column("tail_bound_rel")]);
    row.converged = parse_bool(fields[table.column("converged")]);
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepRequest& req, const Metadata& extra) {
  if (req.output_path.empty()) throw IoError("no output path given");
  auto rows = evaluate_sweep(req);
  write_csv(req.output_path, sweep_table(req, rows, extra));
  return rows;
}

}  // namespace fockseries::cli
