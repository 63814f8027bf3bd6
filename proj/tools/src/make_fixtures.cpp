// Regenerates the extended-precision golden fixtures under tests/fixtures.
// The files are written once and committed; they are never edited by hand.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "fockseries/cli/csv.hpp"
#include "fockseries/error.hpp"
#include "fockseries/oracle.hpp"
#include "fockseries/version.hpp"

namespace fs = std::filesystem;
using namespace fockseries;
using cli::format_bool;
using cli::format_double;

namespace {

const std::vector<double> kQs = {0.5, 0.8, 1.0};
const std::vector<int> kKs = {0, 1, 3};
const std::vector<double> kAlphas = {0.0, 0.5, 1.0, 2.0};
constexpr double kTheta = std::numbers::pi / 4;

StateSpec make_spec(double q, int k, double alpha) {
  return StateSpec{alpha, 0.0, k, NonlinearityModel::penson_solomon(q)};
}

cli::Metadata base_metadata(const oracle::PrecisionConfig& cfg) {
  return {
      {"generator", "fockseries-fixtures"},
      {"mantissa_bits", std::to_string(cfg.mantissa_bits)},
      {"stopping", "geometric tail below " + format_double(cfg.term_floor_rel) +
                       " of the running sum with term ratio < 1"},
  };
}

cli::CsvTable grid_table(const std::string& observable, double q, int k,
                         const oracle::PrecisionConfig& cfg) {
  cli::CsvTable table;
  table.version = kVersion;
  table.metadata = base_metadata(cfg);
  table.metadata.insert(table.metadata.end(), {
      {"observable", observable},
      {"nonlinearity", "penson-solomon"},
      {"q", format_double(q)},
      {"k", std::to_string(k)},
      {"policy", "oracle"},
      {"tol", format_double(cfg.term_floor_rel)},
      {"theta", format_double(kTheta)},
      {"alphas", "0;0.5;1;2"},
  });
  table.columns = {"alpha", "value", "n_max_used", "tail_bound_rel", "converged"};

  for (double alpha : kAlphas) {
    const auto spec = make_spec(q, k, alpha);
    std::string value;
    std::size_t n_max = 0;
    bool converged = true;
    if (observable == "mandel_q") {
      if (k == 0 && alpha == 0.0) {
        converged = false;
      } else {
        const auto stats = oracle::oracle_statistics(spec, cfg);
        value = format_double(stats.mandel_q.to_double());
        n_max = stats.n_max;
      }
    } else {
      const auto ent = oracle::oracle_entropy(spec, BeamSplitterSetting{kTheta}, cfg);
      value = format_double(ent.linear_entropy.to_double());
      n_max = ent.dimension - 1 - static_cast<std::size_t>(k);
    }
    table.rows.push_back({format_double(alpha), value, std::to_string(n_max),
                          format_double(cfg.term_floor_rel), format_bool(converged)});
  }
  return table;
}

cli::CsvTable distribution_table(double q, int k, double alpha,
                                 const oracle::PrecisionConfig& cfg) {
  cli::CsvTable table;
  table.version = kVersion;
  table.metadata = base_metadata(cfg);
  table.metadata.insert(table.metadata.end(), {
      {"observable", "distribution"},
      {"nonlinearity", "penson-solomon"},
      {"q", format_double(q)},
      {"k", std::to_string(k)},
      {"policy", "oracle"},
      {"tol", format_double(cfg.term_floor_rel)},
      {"theta", format_double(kTheta)},
      {"alphas", format_double(alpha)},
  });
  table.columns = {"alpha", "photon_number", "value", "n_max_used", "tail_bound_rel",
                   "converged"};
  const auto series = oracle::oracle_series(make_spec(q, k, alpha), cfg);
  for (const auto& [photons, p] : oracle::oracle_distribution(series)) {
    table.rows.push_back({format_double(alpha), std::to_string(photons),
                          format_double(p.to_double()), std::to_string(series.n_max()),
                          format_double(cfg.term_floor_rel), "true"});
  }
  return table;
}

cli::CsvTable scalar_table(const oracle::PrecisionConfig& cfg) {
  cli::CsvTable table;
  table.version = kVersion;
  table.metadata = base_metadata(cfg);
  table.metadata.emplace_back("theta", format_double(kTheta));
  table.columns = {"name", "q", "k", "alpha", "n", "value"};

  auto add = [&](const std::string& name, double q, int k, double alpha, const std::string& n,
                 const oracle::Real& value) {
    table.rows.push_back({name, format_double(q), std::to_string(k), format_double(alpha), n,
                          format_double(value.to_double())});
  };
  add("log_weight", 0.5, 3, 0.5, "5", oracle::oracle_log_weight(make_spec(0.5, 3, 0.5), 5, cfg));
  add("log_weight", 0.5, 2, 1.0, "0", oracle::oracle_log_weight(make_spec(0.5, 2, 1.0), 0, cfg));
  add("log_weight", 0.5, 3, 5.0, "1600",
      oracle::oracle_log_weight(make_spec(0.5, 3, 5.0), 1600, cfg));
  add("normalization_log", 0.5, 1, 0.5, "",
      oracle::oracle_normalization_log(oracle::oracle_series(make_spec(0.5, 1, 0.5), cfg)));
  add("mandel_q", 0.5, 1, 0.5, "", oracle::oracle_statistics(make_spec(0.5, 1, 0.5), cfg).mandel_q);
  add("linear_entropy", 0.5, 1, 0.5, "",
      oracle::oracle_entropy(make_spec(0.5, 1, 0.5), BeamSplitterSetting{kTheta}, cfg)
          .linear_entropy);
  add("linear_entropy", 0.5, 2, 1.0, "",
      oracle::oracle_entropy(make_spec(0.5, 2, 1.0), BeamSplitterSetting{kTheta}, cfg)
          .linear_entropy);
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Write the extended-precision golden fixtures"};
  std::string out_dir;
  oracle::PrecisionConfig cfg;
  app.add_option("--out-dir", out_dir, "Fixture directory")->required();
  app.add_option("--bits", cfg.mantissa_bits, "Mantissa bits")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    fs::create_directories(out_dir);
    for (const std::string observable : {"mandel_q", "linear_entropy"}) {
      for (double q : kQs) {
        for (int k : kKs) {
          const auto path = fs::path(out_dir) / ("oracle_" + observable + "_q" +
                                                 format_double(q) + "_k" + std::to_string(k) +
                                                 ".csv");
          cli::write_csv(path, grid_table(observable, q, k, cfg));
          std::cout << path.string() << "\n";
        }
      }
    }
    const auto dist = fs::path(out_dir) / "oracle_distribution_q0.5_k1_a0.5.csv";
    cli::write_csv(dist, distribution_table(0.5, 1, 0.5, cfg));
    std::cout << dist.string() << "\n";
    const auto scalars = fs::path(out_dir) / "oracle_scalars.csv";
    cli::write_csv(scalars, scalar_table(cfg));
    std::cout << scalars.string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
