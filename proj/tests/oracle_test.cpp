#include "vwm/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "support/fixtures.hpp"

namespace vwm {
namespace {

TEST(UserChoiceOracle, AtSigmaThreshold) {
  for (const OracleReport& r :
       user_choice_oracle(testing::baseline_site(3.0), 5.0, 1.0, 1'000'000, 17)) {
    EXPECT_TRUE(r.pass) << r.name << ' ' << r.abs_err;
    EXPECT_LE(r.abs_err, 0.0015);
    EXPECT_EQ(r.samples, 1'000'000u);
  }
}

TEST(UserChoiceOracle, FreeMembershipIsAllVip) {
  const auto r = user_choice_oracle(testing::baseline_site(3.75), 0.0, 1.0, 10'000, 3);
  EXPECT_EQ(r[0].oracle_value, 1.0);
  EXPECT_EQ(r[2].oracle_value, 0.0);
}

TEST(UserChoiceOracle, InteriorPrice) {
  const auto r = user_choice_oracle(testing::baseline_site(3.75), 3.9215686274509802, 1.0,
                                    1'000'000, 5);
  EXPECT_NEAR(r[2].closed_form, 0.3922, 1e-4);
  for (const auto& x : r) EXPECT_TRUE(x.pass) << x.name;
}

TEST(UserChoiceOracle, NeedsEnoughTrials) {
  EXPECT_THROW(user_choice_oracle(testing::baseline_site(3.0), 5.0, 1.0, 999, 1),
               std::invalid_argument);
}

TEST(NashOracle, BaselineAllocationHolds) {
  const std::vector<double> c{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const auto reports = nash_deviation_oracle(participating_subset(c), c, 1.0, 1000);
  ASSERT_EQ(reports.size(), 10u);
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.name;
}

TEST(NashOracle, CorruptedCoefficientsFail) {
  const std::vector<double> c{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  AdSpaceEquilibrium eq = participating_subset(c);
  eq.coeff[0] *= 1.5;
  bool any_fail = false;
  for (const auto& r : nash_deviation_oracle(eq, c, 1.0, 1000)) any_fail |= !r.pass;
  EXPECT_TRUE(any_fail);
}

TEST(NashOracle, Preconditions) {
  const std::vector<double> c{1, 2};
  const AdSpaceEquilibrium eq = participating_subset(c);
  EXPECT_THROW(nash_deviation_oracle(eq, c, 0.0, 1000), std::invalid_argument);
  EXPECT_THROW(nash_deviation_oracle(eq, c, 1.0, 999), std::invalid_argument);
}

TEST(BudgetOracle, Baseline) {
  const MarketConfig cfg = testing::baseline();
  const OracleReport r = budget_grid_oracle(AdvertiserModel(solve_stage_two(cfg), cfg), 100'000);
  EXPECT_TRUE(r.pass) << r.rel_err;
  EXPECT_EQ(r.metric, ErrorMetric::kRelative);
}

TEST(BudgetOracle, TinyRewardArgmaxAtZero) {
  MarketConfig cfg = testing::baseline();
  for (auto& w : cfg.websites) w.reward = 1e-9;
  const OracleReport r = budget_grid_oracle(AdvertiserModel(solve_stage_two(cfg), cfg), 100'000);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.location, 0.0);
  EXPECT_EQ(r.closed_form, 0.0);
}

TEST(BudgetOracle, HugeRewardArgmaxAtMaxThreshold) {
  MarketConfig cfg = testing::baseline();
  for (auto& w : cfg.websites) w.reward = 1e6;
  const AdvertiserModel m(solve_stage_two(cfg), cfg);
  const OracleReport r = budget_grid_oracle(m, 100'000);
  EXPECT_TRUE(r.pass);
  EXPECT_DOUBLE_EQ(r.location, m.schedule().t_max);
}

TEST(PoissonOracle, Examples) {
  const double phi1 = zipf_popularity(10, 0.5).phi[0];
  const double non = 0.39215686274509803;
  const OracleReport zero = poisson_watch_oracle(0.0, 5, phi1, 5000, non, 10.0, 100'000, 1);
  EXPECT_EQ(zero.oracle_value, 0.0);
  EXPECT_TRUE(zero.pass);

  const OracleReport mid = poisson_watch_oracle(500.0, 5, phi1, 5000, non, 10.0, 1'000'000, 2);
  EXPECT_NEAR(mid.closed_form, 0.2258, 1e-3);
  EXPECT_TRUE(mid.pass) << mid.abs_err << " vs " << mid.tolerance;

  const OracleReport sat = poisson_watch_oracle(1e9, 5, phi1, 5000, non, 10.0, 1'000'000, 3);
  EXPECT_NEAR(sat.closed_form, 0.8647, 1e-4);
  EXPECT_TRUE(sat.pass);
}

TEST(VerifyEquilibrium, BaselinePassesEverything) {
  VerifyOptions opts;
  opts.user_trials = 200'000;
  opts.poisson_trials = 200'000;
  const auto reports = verify_equilibrium(testing::baseline(), opts);
  EXPECT_EQ(reports.size(), 30u + 10u + 1u + 2u + 1u);
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.name;
  std::ostringstream os;
  write_oracle_table(os, reports);
  EXPECT_NE(os.str().find("budget_grid"), std::string::npos);
}

}  // namespace
}  // namespace vwm
