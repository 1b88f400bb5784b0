#include "vwm/advertiser.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "support/fixtures.hpp"

namespace vwm {
namespace {

AdvertiserModel model_of(const MarketConfig& cfg) {
  return AdvertiserModel(solve_stage_two(cfg), cfg);
}

TEST(WatchProbability, Examples) {
  const double phi1 = zipf_popularity(10, 0.5).phi[0];
  const double non = 0.39215686274509803;
  EXPECT_EQ(ad_watch_probability(0.0, 5, phi1, 5000, non, 10.0), 0.0);
  EXPECT_NEAR(ad_watch_probability(500.0, 5, phi1, 5000, non, 10.0), 0.22591291040370998,
              1e-14);
  const double capacity = 10.0 * phi1 * 5000 * non;
  const double cap = 1.0 - std::exp(-2.0);
  EXPECT_NEAR(ad_watch_probability(capacity, 5, phi1, 5000, non, 10.0), cap, 1e-15);
  EXPECT_NEAR(ad_watch_probability(capacity * (1 - 1e-12), 5, phi1, 5000, non, 10.0), cap,
              1e-11);
  EXPECT_EQ(ad_watch_probability(10 * capacity, 5, phi1, 5000, non, 10.0),
            ad_watch_probability(capacity, 5, phi1, 5000, non, 10.0));
}

TEST(Schedule, BaselineThresholds) {
  const AdvertiserModel m = model_of(testing::baseline());
  const SaturationSchedule& s = m.schedule();
  EXPECT_NEAR(s.thresholds[0], 17573.2585, 1e-3);
  EXPECT_NEAR(s.thresholds[1], 24852.3405, 1e-3);
  EXPECT_EQ(s.alpha, (std::vector<int>{0, 1}));
  EXPECT_EQ(s.t_min, s.thresholds[0]);
  EXPECT_EQ(s.t_max, s.thresholds[1]);
  for (int k = 2; k < 10; ++k) EXPECT_EQ(s.thresholds[k], 0.0);
}

TEST(Schedule, AlphaSortsThresholds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AdvertiserModel m = model_of(testing::random_market(seed));
    const SaturationSchedule& s = m.schedule();
    ASSERT_EQ(s.alpha.size(), m.ads().subset.size());
    for (std::size_t i = 1; i < s.alpha.size(); ++i) EXPECT_LE(s.at_rank(i - 1), s.at_rank(i));
  }
}

TEST(AdvertiserUtility, ZeroBudget) {
  EXPECT_EQ(advertiser_utility(model_of(testing::baseline()), 0.0), 0.0);
}

TEST(AdvertiserUtility, BeyondMaxThresholdIsLinear) {
  const MarketConfig cfg = testing::baseline();
  const AdvertiserModel m = model_of(cfg);
  double plateau = 0.0;
  for (int k : m.ads().subset)
    plateau += m.reward(k) * m.impressions(k) * (1.0 - std::exp(-2.0));
  for (double f : {1.0, 1.5, 3.0}) {
    const double p = f * m.schedule().t_max;
    EXPECT_NEAR(advertiser_utility(m, p), plateau - p, 1e-9 * plateau);
  }
}

TEST(RelaxedOptimum, SingleTermClosedForm) {
  const AdvertiserModel m = model_of(testing::baseline());
  const int j = m.schedule().alpha[1];
  const double a = m.coeff(j), b = m.impressions(j), w = m.reward(j);
  ASSERT_GT(w * a, 1.0);
  EXPECT_NEAR(relaxed_optimum(m, 1), b / a * std::log(w * a), 1e-8 * b / a);
}

TEST(RelaxedOptimum, StationaryAndNested) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AdvertiserModel m = model_of(testing::random_market(seed));
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < m.schedule().alpha.size(); ++s) {
      const double p = relaxed_optimum(m, s);
      EXPECT_LE(p, prev * (1 + 1e-9)) << seed << ' ' << s;
      if (p > 0.0) EXPECT_NEAR(relaxed_derivative(m, s, p), 0.0, 1e-6);
      prev = p;
    }
    EXPECT_THROW(relaxed_optimum(m, m.schedule().alpha.size()), std::invalid_argument);
  }
}

TEST(RelaxedObjective, MatchesUtilityOnEachPiece) {
  const AdvertiserModel m = model_of(testing::baseline());
  const SaturationSchedule& s = m.schedule();
  EXPECT_NEAR(relaxed_objective(m, 0, 0.5 * s.t_min), advertiser_utility(m, 0.5 * s.t_min),
              1e-6);
  const double mid = 0.5 * (s.t_min + s.t_max);
  EXPECT_NEAR(relaxed_objective(m, 1, mid), advertiser_utility(m, mid), 1e-6);
  EXPECT_NEAR(relaxed_objective(m, 2, 2 * s.t_max), advertiser_utility(m, 2 * s.t_max),
              1e-6);
}

TEST(OptimalBudget, Baseline) {
  const AdvertiserModel m = model_of(testing::baseline());
  const BudgetSolution b = optimal_budget(m);
  EXPECT_NEAR(b.budget, 24852.3405, 1e-3);
  EXPECT_DOUBLE_EQ(b.budget, m.schedule().t_max);
  EXPECT_NEAR(b.utility, 263363.744, 1e-3);
  EXPECT_EQ(b.saturated, (std::vector<int>{0, 1}));
  EXPECT_NEAR(b.watch_prob[0], 1.0 - std::exp(-2.0), 1e-12);
  EXPECT_EQ(b.watch_prob[5], 0.0);
}

TEST(OptimalBudget, TinyRewardsMeanNoAdvertising) {
  MarketConfig cfg = testing::baseline();
  for (auto& w : cfg.websites) w.reward = 1e-9;
  const AdvertiserModel m = model_of(cfg);
  EXPECT_EQ(relaxed_optimum(m, 0), 0.0);
  const BudgetSolution b = optimal_budget(m);
  EXPECT_EQ(b.budget, 0.0);
  EXPECT_EQ(b.utility, 0.0);
  EXPECT_TRUE(b.saturated.empty());
}

TEST(OptimalBudget, HugeRewardsSaturateEverything) {
  MarketConfig cfg = testing::baseline();
  cfg.websites = testing::baseline().websites;
  for (auto& w : cfg.websites) {
    w.reward = 1e6;
    w.ad_cost = 1.0;
  }
  const AdvertiserModel m = model_of(cfg);
  const BudgetSolution b = optimal_budget(m);
  EXPECT_EQ(b.budget, m.schedule().t_max);
  EXPECT_EQ(b.saturated.size(), 10u);
}

TEST(OptimalBudget, NeverPastMaxThresholdAndBeatsNeighbours) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AdvertiserModel m = model_of(testing::random_market(seed));
    const BudgetSolution b = optimal_budget(m);
    EXPECT_GE(b.budget, 0.0);
    EXPECT_LE(b.budget, m.schedule().t_max);
    for (double f : {0.9, 0.99, 1.01, 1.1}) {
      EXPECT_GE(b.utility, advertiser_utility(m, f * b.budget) - 1e-9 * std::abs(b.utility))
          << seed;
    }
  }
}

}  // namespace
}  // namespace vwm
