#ifndef VWM_TESTS_FIXTURES_HPP_
#define VWM_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <vector>

#include "vwm/market.hpp"
#include "vwm/rng.hpp"

namespace vwm::testing {

// K=10, theta_max=1, Q = 40/20/10, sigma = mult * sigma^T, C_k = k, xi=10,
// gamma=0.5, N=5000, G=5, omega=100.
inline MarketConfig baseline(double sigma_mult = 1.25) {
  MarketConfig cfg;
  cfg.website_count = 10;
  cfg.user_count = 5000;
  cfg.ad_count = 5;
  cfg.visit_rate = 10.0;
  cfg.zipf_exponent = 0.5;
  cfg.theta_max = 1.0;
  cfg.rng_seed = 20240601;
  for (int k = 1; k <= 10; ++k) {
    WebsiteParams w{40.0, 20.0, 10.0, 0.0, static_cast<double>(k), 100.0};
    w.sigma = sigma_mult * sigma_threshold(w);
    cfg.websites.push_back(w);
  }
  return cfg;
}

inline WebsiteParams baseline_site(double sigma) {
  return {40.0, 20.0, 10.0, sigma, 1.0, 100.0};
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(SplitMix64::mix(seed)) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.uniform(); }
  int integer(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng_.uniform() * (hi - lo + 1));
  }

 private:
  SplitMix64 rng_;
};

inline std::vector<double> random_costs(Draw& d, int k_count) {
  std::vector<double> c(k_count);
  for (auto& x : c) x = d.uniform(0.5, 10.0);
  return c;
}

// Random but valid market: sigma strictly above threshold, every
// parameter positive.
inline MarketConfig random_market(std::uint64_t seed) {
  Draw d(seed);
  MarketConfig cfg;
  cfg.website_count = d.integer(2, 12);
  cfg.user_count = d.integer(1000, 20000);
  cfg.ad_count = d.integer(1, 10);
  cfg.visit_rate = d.uniform(1.0, 40.0);
  cfg.zipf_exponent = d.uniform(0.1, 1.5);
  cfg.theta_max = d.uniform(0.5, 2.0);
  cfg.rng_seed = seed;
  for (int k = 0; k < cfg.website_count; ++k) {
    WebsiteParams w;
    w.q_non = d.uniform(1.0, 20.0);
    w.q_regular = w.q_non + d.uniform(1.0, 20.0);
    w.q_vip = w.q_regular + d.uniform(1.0, 30.0);
    w.sigma = d.uniform(1.01, 5.0) * sigma_threshold(w);
    w.ad_cost = d.uniform(0.5, 10.0);
    w.reward = d.uniform(1.0, 200.0);
    cfg.websites.push_back(w);
  }
  return cfg;
}

}  // namespace vwm::testing

#endif  // VWM_TESTS_FIXTURES_HPP_
