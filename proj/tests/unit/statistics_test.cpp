#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "fockseries/error.hpp"
#include "fockseries/statistics.hpp"
#include "reference.hpp"

namespace fockseries {
namespace {

StateSpec ps(double q, int k, double alpha, double phase = 0.0) {
  return StateSpec{alpha, phase, k, NonlinearityModel::penson_solomon(q)};
}

PhotonStatistics stats_of(const StateSpec& spec) {
  return photon_statistics(truncate(spec, AdaptiveTolerance{}), spec);
}

TEST(PhotonDistribution, FockLimit) {
  const auto spec = ps(0.5, 3, 0.0);
  const auto p = photon_distribution(truncate(spec, AdaptiveTolerance{}), spec);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].photon_number, 3);
  EXPECT_EQ(p[0].probability, 1.0);
}

TEST(PhotonDistribution, CoherentIsPoisson) {
  const auto spec = ps(1.0, 0, 2.0);
  const auto p = photon_distribution(truncate(spec, AdaptiveTolerance{}), spec);
  for (const auto& [n, prob] : p) {
    EXPECT_NEAR(prob, testing::poisson_pmf(4.0, static_cast<int>(n)), 1e-13) << n;
  }
}

TEST(PhotonDistribution, SupportStartsAtK) {
  const auto spec = ps(0.7, 4, 1.1);
  const auto p = photon_distribution(truncate(spec, AdaptiveTolerance{}), spec);
  EXPECT_EQ(p.front().photon_number, 4);
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_EQ(p[i].photon_number, p[i - 1].photon_number + 1);
}

TEST(PhotonDistribution, PinnedByOracleFixture) {
  const auto table = testing::load_fixture("oracle_distribution_q0.5_k1_a0.5.csv");
  const auto spec = ps(0.5, 1, 0.5);
  const auto p = photon_distribution(truncate(spec, AdaptiveTolerance{}), spec);
  const auto n_col = table.column("photon_number");
  const auto v_col = table.column("value");
  std::size_t compared = 0;
  for (const auto& row : table.rows) {
    const auto photons = std::stoll(row[n_col]);
    const double expected = cli::parse_double(row[v_col]);
    const auto idx = static_cast<std::size_t>(photons - 1);
    const double got = idx < p.size() ? p[idx].probability : 0.0;
    // Entries beyond the double cutoff are below the certified tail.
    EXPECT_NEAR(got, expected, 1e-14 + 1e-12 * expected) << photons;
    ++compared;
  }
  EXPECT_GE(compared, p.size());
}

TEST(PhotonDistribution, SumsToOneWithinTailBound) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> q_dist(0.3, 1.0);
  std::uniform_real_distribution<double> a_dist(0.0, 4.0);
  std::uniform_int_distribution<int> k_dist(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto spec = ps(q_dist(rng), k_dist(rng), a_dist(rng));
    const auto s = truncate(spec, AdaptiveTolerance{});
    double total = 0.0;
    for (const auto& e : photon_distribution(s, spec)) total += e.probability;
    // Rounding of the sum itself sits on top of the certified slack.
    const double slack = 2.0 * s.tail_bound_rel + 1e-13;
    EXPECT_NEAR(total, 1.0, slack) << trial;
  }
}

TEST(PhotonStatisticsTest, FockStateHasQMinusOne) {
  for (double q : {0.3, 0.5, 1.0}) {
    for (int k : {1, 2, 5}) {
      const auto st = stats_of(ps(q, k, 0.0));
      EXPECT_EQ(st.mandel_q, -1.0);
      EXPECT_EQ(st.mean_n, k);
      EXPECT_EQ(st.variance, 0.0);
    }
  }
}

TEST(PhotonStatisticsTest, CoherentStateIsPoissonian) {
  const auto st = stats_of(ps(1.0, 0, 2.0));
  EXPECT_NEAR(st.mandel_q, 0.0, 1e-12);
  EXPECT_NEAR(st.mean_n, 4.0, 1e-12);
  EXPECT_NEAR(st.mean_n2, 20.0, 1e-11);
}

TEST(PhotonStatisticsTest, VacuumIsUndefined) {
  try {
    stats_of(ps(1.0, 0, 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VacuumUndefined);
  }
}

TEST(PhotonStatisticsTest, PinnedByOracleFixture) {
  const auto table = testing::load_fixture("oracle_scalars.csv");
  for (const auto& row : table.rows) {
    if (row[0] != "mandel_q") continue;
    const auto st = stats_of(ps(cli::parse_double(row[1]), std::stoi(row[2]),
                                cli::parse_double(row[3])));
    const double expected = cli::parse_double(row[5]);
    EXPECT_NEAR(st.mandel_q, expected, 1e-9 * std::abs(expected));
    return;
  }
  FAIL() << "fixture row missing";
}

TEST(PhotonStatisticsTest, FixedCutoffCarriesUnconvergedFlag) {
  const auto spec = ps(0.5, 3, 5.0);
  const auto st = photon_statistics(truncate(spec, FixedCutoff{100}), spec);
  EXPECT_FALSE(st.converged);
  EXPECT_TRUE(std::isinf(st.tail_bound_rel));
  // The truncated distribution piles up against n_max: nearly Fock-like.
  EXPECT_LT(st.mandel_q, -0.9);
}

TEST(PhotonStatisticsTest, PhaseInvariantBitForBit) {
  for (double alpha : {0.3, 1.0, 2.5}) {
    const auto ref = stats_of(ps(0.6, 2, alpha, 0.0));
    for (double phase : {1.7, std::numbers::pi}) {
      const auto st = stats_of(ps(0.6, 2, alpha, phase));
      EXPECT_EQ(st.mandel_q, ref.mandel_q);
      EXPECT_EQ(st.mean_n, ref.mean_n);
      EXPECT_EQ(st.mean_n2, ref.mean_n2);
      EXPECT_EQ(st.variance, ref.variance);
    }
  }
}

TEST(PhotonStatisticsTest, BoundsHoldOnGrid) {
  for (double q : {0.3, 0.5, 0.8, 1.0}) {
    for (int k : {0, 1, 2, 4}) {
      for (int i = 0; i <= 20; ++i) {
        const double alpha = 0.2 * i;
        if (k == 0 && alpha == 0.0) continue;
        const auto st = stats_of(ps(q, k, alpha));
        EXPECT_GE(st.mandel_q, -1.0);
        EXPECT_GE(st.variance, 0.0);
        EXPECT_GE(st.mean_n, k);
        EXPECT_GE(st.mean_n2, st.mean_n * st.mean_n);
      }
    }
  }
}

TEST(PhotonStatisticsTest, CoherentLimitIsPoissonPerEntry) {
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    const auto spec = ps(1.0, 0, alpha);
    double worst = 0.0;
    for (const auto& [n, prob] : photon_distribution(truncate(spec, AdaptiveTolerance{}), spec)) {
      worst = std::max(worst, std::abs(prob - testing::poisson_pmf(alpha * alpha, static_cast<int>(n))));
    }
    EXPECT_LE(worst, 1e-12) << alpha;
  }
}

// Q + 1 grows like |alpha|^2 q^(-2k) (k+1)/k, so the window holds while
// q^(-2k) stays moderate, as for the figure-1 parameter sets.
TEST(PhotonStatisticsTest, FockLimitApproachedContinuously) {
  const std::pair<double, int> sets[] = {{0.5, 1}, {0.5, 2}, {0.5, 3}, {0.8, 4}, {0.8, 6}, {0.8, 8}, {1.0, 1}};
  for (const auto& [q, k] : sets) {
    const double qv = stats_of(ps(q, k, 1e-6)).mandel_q;
    EXPECT_GE(qv, -1.0);
    EXPECT_LE(qv, -1.0 + 1e-9) << q << " " << k;
  }
}

}  // namespace
}  // namespace fockseries
