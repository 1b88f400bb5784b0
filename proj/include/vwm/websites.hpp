#ifndef VWM_WEBSITES_HPP_
#define VWM_WEBSITES_HPP_

#include <span>
#include <stdexcept>
#include <vector>

#include "vwm/market.hpp"
#include "vwm/users.hpp"

namespace vwm {

struct PriceChoice {
  double price = 0.0;
  bool interior = false;  // stationary point lay strictly below the cap
};

// Upper end of the feasible price interval: the price at which the VIP
// region empties (t12 reaches theta_max).
double price_cap(const WebsiteParams& w, double theta_max);

// Revenue-maximizing membership price: the stationary point of the concave
// membership utility, clipped to the cap.
PriceChoice optimal_price(const WebsiteParams& w, double theta_max);

double membership_utility(const WebsiteParams& w, double popularity,
                          std::int64_t user_count, double price,
                          double theta_max);

// Websites selling a positive number of AD spaces at the Nash equilibrium,
// and the coefficients A_k with M_k^* = A_k * P_a. Indices are 0-based.
struct AdSpaceEquilibrium {
  std::vector<int> subset;      // ascending cost order (stable by index)
  std::vector<double> coeff;    // length K, zero outside the subset
  double cost_sum = 0.0;        // sum of costs over the subset

  bool contains(int k) const;
};

AdSpaceEquilibrium participating_subset(std::span<const double> costs);

std::vector<double> ad_allocation(const AdSpaceEquilibrium& eq, double budget);

// Proportional-share revenue minus linear maintenance cost. Throws if the
// other websites sell nothing (no equilibrium exists in that case).
double ad_utility(int k, std::span<const double> spaces, double cost,
                  double budget);

struct StageTwoSolution {
  Popularity popularity;
  std::vector<PriceChoice> prices;
  std::vector<MembershipShares> shares;
  std::vector<double> membership_utility;
  AdSpaceEquilibrium ads;
};

// Prices, shares and AD-space equilibrium for every website. The config must
// be valid.
StageTwoSolution solve_stage_two(const MarketConfig& config);

}  // namespace vwm

#endif  // VWM_WEBSITES_HPP_
