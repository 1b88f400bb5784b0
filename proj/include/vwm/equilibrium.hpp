#ifndef VWM_EQUILIBRIUM_HPP_
#define VWM_EQUILIBRIUM_HPP_

#include <ostream>
#include <vector>

#include "vwm/advertiser.hpp"
#include "vwm/market.hpp"
#include "vwm/websites.hpp"

namespace vwm {

struct WebsiteOutcome {
  double price = 0.0;
  double vip_price = 0.0;
  MembershipShares shares;
  double ad_cost = 0.0;
  double spaces = 0.0;
  double membership_utility = 0.0;
  double ad_utility = 0.0;
  double total_utility = 0.0;
  double saturation_threshold = 0.0;  // 0 outside the participating subset
  double watch_prob = 0.0;
  bool participates = false;
  bool saturated = false;
};

// Joint equilibrium of all three stages.
struct EquilibriumReport {
  std::vector<WebsiteOutcome> websites;
  std::vector<int> subset;  // 0-based, ascending cost order
  double budget = 0.0;
  double advertiser_utility = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
};

// Backward induction: users, then websites, then the advertiser. Throws
// ValidationError for invalid configs.
EquilibriumReport solve_equilibrium(const MarketConfig& config);

// One row per website, header first.
void write_report_csv(std::ostream& os, const EquilibriumReport& report);

void write_report_summary(std::ostream& os, const EquilibriumReport& report);

}  // namespace vwm

#endif  // VWM_EQUILIBRIUM_HPP_
