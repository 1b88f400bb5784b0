#include "vwm/market.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "support/fixtures.hpp"

namespace vwm {
namespace {

bool has_issue(const ValidationReport& r, IssueKind kind, const std::string& needle) {
  for (const auto& i : r.issues)
    if (i.kind == kind && (i.message.find(needle) != std::string::npos ||
                           i.field.find(needle) != std::string::npos))
      return true;
  return false;
}

TEST(Zipf, SingleWebsite) {
  EXPECT_EQ(zipf_popularity(1, 0.7).phi, std::vector<double>{1.0});
}

TEST(Zipf, TwoWebsitesHarmonic) {
  const auto p = zipf_popularity(2, 1.0).phi;
  EXPECT_NEAR(p[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(p[1], 1.0 / 3.0, 1e-15);
}

TEST(Zipf, TenWebsitesHalfExponent) {
  const auto p = zipf_popularity(10, 0.5).phi;
  EXPECT_NEAR(p[0], 0.1991636, 1e-7);
  EXPECT_NEAR(p[1], 0.14082993, 1e-8);
  EXPECT_NEAR(p[2], 0.11498716, 1e-8);
}

TEST(Zipf, NormalizedAndRankMonotone) {
  for (int k : {2, 7, 100, 10000}) {
    for (double g : {0.01, 0.5, 1.0, 2.5, 4.0}) {
      const auto p = zipf_popularity(k, g).phi;
      EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12) << k << ' ' << g;
      for (std::size_t i = 1; i < p.size(); ++i) ASSERT_GE(p[i - 1], p[i]);
      EXPECT_GT(p.back(), 0.0);
    }
  }
}

TEST(Zipf, ConcentrationRaisesHeadLowersTail) {
  for (double g = 0.1; g < 3.0; g += 0.1) {
    const auto lo = zipf_popularity(10, g).phi;
    const auto hi = zipf_popularity(10, g + 0.1).phi;
    EXPECT_GT(hi.front(), lo.front());
    EXPECT_LT(hi.back(), lo.back());
  }
}

TEST(SigmaThreshold, BaselineQualities) {
  EXPECT_DOUBLE_EQ(sigma_threshold(testing::baseline_site(2.0)), 3.0);
}

TEST(Validate, BaselineIsClean) {
  const ValidationReport r = validate(testing::baseline());
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.issues.empty()) << r.to_string();
}

TEST(Validate, EqualRegularAndNonQuality) {
  MarketConfig cfg = testing::baseline();
  cfg.websites[3].q_regular = cfg.websites[3].q_non;
  const ValidationReport r = validate(cfg);
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(has_issue(r, IssueKind::kViolation, "quality ordering"));
  EXPECT_EQ(r.violations().size(), 1u);
  EXPECT_EQ(r.violations()[0].field, "websites[4].quality");
}

TEST(Validate, SigmaAtThresholdIsOnlyANote) {
  const MarketConfig cfg = testing::baseline(1.0);
  const ValidationReport r = validate(cfg);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(has_issue(r, IssueKind::kNote, "sigma equals threshold"));
  EXPECT_EQ(r.issues.size(), 10u);
}

TEST(Validate, SigmaBelowThresholdIsRejected) {
  MarketConfig cfg = testing::baseline();
  cfg.websites[0].sigma = 2.0;
  const ValidationReport r = validate(cfg);
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(has_issue(r, IssueKind::kViolation, "unsupported"));
  EXPECT_THROW(require_valid(cfg), ValidationError);
}

TEST(Validate, ScalarFields) {
  auto bad = [](auto mutate, const char* field) {
    MarketConfig cfg = testing::baseline();
    mutate(cfg);
    const ValidationReport r = validate(cfg);
    EXPECT_FALSE(r.valid()) << field;
    EXPECT_TRUE(has_issue(r, IssueKind::kViolation, field)) << r.to_string();
  };
  bad([](MarketConfig& c) { c.user_count = 0; }, "N");
  bad([](MarketConfig& c) { c.ad_count = 0; }, "G");
  bad([](MarketConfig& c) { c.visit_rate = 0.0; }, "xi");
  bad([](MarketConfig& c) { c.zipf_exponent = -1.0; }, "gamma");
  bad([](MarketConfig& c) { c.theta_max = std::nan(""); }, "theta_max");
  bad([](MarketConfig& c) { c.websites.pop_back(); }, "websites");
  bad([](MarketConfig& c) { c.websites[2].ad_cost = 0.0; }, "ad_cost");
  bad([](MarketConfig& c) { c.websites[2].reward = -1.0; }, "reward");
  bad([](MarketConfig& c) { c.websites[2].sigma = 1.0; }, "sigma");
  bad(
      [](MarketConfig& c) {
        c.website_count = 1;
        c.websites.resize(1);
      },
      "K");
}

TEST(Validate, ErrorCarriesReport) {
  MarketConfig cfg = testing::baseline();
  cfg.visit_rate = -2.0;
  try {
    require_valid(cfg);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_FALSE(e.report().valid());
    EXPECT_NE(std::string(e.what()).find("xi"), std::string::npos);
  }
}

TEST(Validate, RandomMarketsAreValid) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ValidationReport r = validate(testing::random_market(s));
    EXPECT_TRUE(r.issues.empty()) << s << '\n' << r.to_string();
  }
}

}  // namespace
}  // namespace vwm
