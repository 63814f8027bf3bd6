// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion's wall-clock limit is part of its check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fockseries/entangle.hpp"
#include "fockseries/error.hpp"
#include "fockseries/oracle.hpp"
#include "fockseries/statistics.hpp"
#include "fockseries/cli/sweep.hpp"
#include "reference.hpp"

using namespace fockseries;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

StateSpec ps(double q, int k, double alpha) {
  return StateSpec{alpha, 0.0, k, NonlinearityModel::penson_solomon(q)};
}

struct QK {
  double q;
  int k;
};
const std::vector<QK> kFig1Sets = {{0.5, 1}, {0.5, 2}, {0.5, 3}, {0.8, 4}, {0.8, 6}, {0.8, 8}};

std::vector<double> q_curve(double q, int k, const TruncationPolicy& policy, double lo, double hi,
                            int steps) {
  cli::SweepRequest req = cli::default_request(cli::Observable::MandelQ);
  req.q = q;
  req.k = k;
  req.alpha_min = lo;
  req.alpha_max = hi;
  req.steps = steps;
  req.policy = policy;
  std::vector<double> out;
  for (const auto& row : cli::evaluate_sweep(req)) out.push_back(row.value.value_or(NAN));
  return out;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome fock_limit() {
  double worst = 0.0;
  for (const auto& [q, k] : kFig1Sets) {
    const auto spec = ps(q, k, 0.0);
    const double value = photon_statistics(truncate(spec, AdaptiveTolerance{1e-14}), spec).mandel_q;
    worst = std::max(worst, std::abs(value + 1.0));
  }
  return {worst <= 1e-12, fmt("max |Q(0) + 1| = %.3g over six sets", worst)};
}

Outcome q_monotone() {
  double worst_drop = 0.0;
  for (const auto& [q, k] : kFig1Sets) {
    const auto curve = q_curve(q, k, AdaptiveTolerance{1e-14}, 0.0, 5.0, 201);
    for (std::size_t i = 1; i < curve.size(); ++i) {
      if (!(curve[i] == curve[i])) return {false, "undefined Q on grid"};
      worst_drop = std::max(worst_drop, curve[i - 1] - curve[i]);
    }
  }
  return {worst_drop <= 1e-10, fmt("largest step decrease %.3g (allowed 1e-10)", worst_drop)};
}

Outcome truncation_artefact() {
  const auto grid = cli::alpha_grid(0.0, 5.0, 201);
  const auto reference = q_curve(0.5, 3, AdaptiveTolerance{1e-14}, 0.0, 5.0, 201);
  Outcome out;
  std::ostringstream detail;
  double previous = -1.0;
  for (std::size_t n_max : {100u, 200u, 400u, 700u}) {
    const auto fixed = q_curve(0.5, 3, FixedCutoff{n_max}, 0.0, 5.0, 201);
    double onset = -1.0;
    double max_dev = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double dev = std::abs(fixed[i] - reference[i]);
      max_dev = std::max(max_dev, dev);
      if (onset < 0.0 && dev > 0.5) onset = grid[i];
    }
    const bool ok = max_dev > 0.5 && fixed.back() < -0.9 && onset > previous;
    out.ok = out.ok && ok;
    detail << "n_max=" << n_max << " onset=" << onset << " Q(5)=" << fixed.back() << "; ";
    previous = onset;
  }
  out.detail = detail.str();
  return out;
}

Outcome oracle_equivalence() {
  double worst = 0.0;
  int compared = 0;
  for (double q : {0.5, 0.8, 1.0}) {
    for (int k : {0, 1, 3}) {
      for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
        const auto spec = ps(q, k, alpha);
        const auto series = truncate(spec, AdaptiveTolerance{});
        const auto check = [&](double got, double ref) {
          const double excess = std::abs(got - ref) / (1e-9 * std::abs(ref) + 1e-12);
          worst = std::max(worst, excess);
          ++compared;
        };
        if (!(k == 0 && alpha == 0.0)) {
          check(photon_statistics(series, spec).mandel_q,
                oracle::oracle_statistics(spec).mandel_q.to_double());
        }
        check(linear_entropy(series, spec, BeamSplitterSetting{kPi / 4}).linear_entropy,
              oracle::oracle_entropy(spec, BeamSplitterSetting{kPi / 4}).linear_entropy.to_double());
      }
    }
  }
  return {worst <= 1.0, std::to_string(compared) + " values, worst error " +
                            fmt("%.3g", worst) + " x (1e-9 rel + 1e-12 abs)"};
}

Outcome entropy_anchors() {
  double worst_fock = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const auto spec = ps(0.5, k, 0.0);
    const double s =
        linear_entropy(truncate(spec, AdaptiveTolerance{}), spec, BeamSplitterSetting{kPi / 4})
            .linear_entropy;
    worst_fock = std::max(worst_fock, std::abs(s - testing::fock_entropy(k)));
  }
  double worst_coherent = 0.0;
  for (double alpha : cli::alpha_grid(0.0, 2.0, 21)) {
    const auto spec = ps(1.0, 0, alpha);
    const double s =
        linear_entropy(truncate(spec, AdaptiveTolerance{}), spec, BeamSplitterSetting{kPi / 4})
            .linear_entropy;
    worst_coherent = std::max(worst_coherent, s);
  }
  return {worst_fock <= 1e-12 && worst_coherent <= 1e-12,
          fmt("Fock k=1..6 max error %.3g; ", worst_fock) +
              fmt("coherent max S %.3g", worst_coherent)};
}

Outcome entropy_trend() {
  double worst_rise = -1.0;
  for (int k : {1, 2, 3}) {
    cli::SweepRequest req = cli::default_request(cli::Observable::LinearEntropy);
    req.q = 0.5;
    req.k = k;
    req.theta = kPi / 4;
    const auto rows = cli::evaluate_sweep(req);
    if (rows.size() != 61) return {false, "grid is not 61 points"};
    for (std::size_t i = 1; i < rows.size(); ++i) {
      worst_rise = std::max(worst_rise, *rows[i].value - *rows[i - 1].value);
    }
  }
  return {worst_rise <= 1e-10, fmt("largest step increase %.3g (allowed 1e-10)", worst_rise)};
}

Outcome tail_certificate() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> q_dist(0.3, 1.0);
  std::uniform_int_distribution<int> k_dist(0, 5);
  std::uniform_real_distribution<double> a_dist(0.0, 4.0);
  int failures = 0;
  double worst_ratio = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    const auto spec = ps(q_dist(rng), k_dist(rng), a_dist(rng));
    const auto s = truncate(spec, AdaptiveTolerance{});
    if (!s.converged) {
      ++failures;
      continue;
    }
    if (spec.alpha_abs == 0.0) continue;
    // Mass of the next 500 terms relative to the retained sum.
    double extra = 0.0;
    for (std::int64_t n = static_cast<std::int64_t>(s.n_max()) + 1;
         n <= static_cast<std::int64_t>(s.n_max()) + 500; ++n) {
      extra += std::exp(log_weight(spec, n) - s.log_total);
    }
    if (!(extra < s.tail_bound_rel)) ++failures;
    if (s.tail_bound_rel > 0.0) worst_ratio = std::max(worst_ratio, extra / s.tail_bound_rel);
  }
  return {failures == 0, std::to_string(failures) + " of 50 draws violate the bound; " +
                             fmt("largest added/bound = %.6g", worst_ratio)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Fock limit Q(0) = -1 for the six figure-1 sets", 1.0, fock_limit},
      {2, "Q non-decreasing on 201 points of [0, 5] (adaptive, tol 1e-14)", 10.0, q_monotone},
      {3, "fixed-cutoff artefact for k=3, q=0.5, n_max 100/200/400/700", 10.0,
       truncation_artefact},
      {4, "double pipeline matches 256-bit oracle on the fixture grid", 120.0,
       oracle_equivalence},
      {5, "entropy anchors: Fock closed form and coherent S = 0", 5.0, entropy_anchors},
      {6, "S non-increasing on 61 points of [0, 3], q=0.5, k=1..3", 60.0, entropy_trend},
      {7, "tail certificate bounds the next 500 terms (50 draws)", 10.0, tail_certificate},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = out.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s | %s | %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL",
                c.id, c.title.c_str(), out.detail.c_str(), seconds, c.limit_seconds,
                in_time ? "" : " TIMEOUT");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
