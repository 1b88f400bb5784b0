#ifndef VWM_USERS_HPP_
#define VWM_USERS_HPP_

#include <stdexcept>

#include "vwm/market.hpp"

namespace vwm {

enum class Strategy { kVip, kRegular, kNon };

const char* to_string(Strategy s);

// Indifference points of the preference factor, each clamped to theta_max.
struct Thresholds {
  double t12 = 0.0;  // VIP vs Regular
  double t13 = 0.0;  // VIP vs Non
  double t23 = 0.0;  // Regular vs Non
  double sigma_threshold = 0.0;
};

struct MembershipShares {
  double vip = 0.0;
  double regular = 0.0;
  double non = 0.0;
};

// Thrown when a closed form is evaluated outside the regime it was derived
// for (sigma >= sigma^T and t12 <= theta_max).
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Per-period payoff of a type-theta user.
double payoff(double theta, Strategy s, const WebsiteParams& w, double price);

Thresholds thresholds(const WebsiteParams& w, double price, double theta_max);

// Ties go to the closed end as printed: theta == t12 is VIP, theta == t23 is
// Regular (and theta == t13 is VIP when sigma <= sigma^T).
Strategy optimal_strategy(double theta, const Thresholds& t, double sigma);

MembershipShares membership_shares(const WebsiteParams& w, double price,
                                   double theta_max);

}  // namespace vwm

#endif  // VWM_USERS_HPP_
