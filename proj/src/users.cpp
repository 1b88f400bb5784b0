#include "vwm/users.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vwm {

namespace {
constexpr double kRegimeSlack = 1e-12;
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::kVip: return "VIP";
    case Strategy::kRegular: return "Regular";
    case Strategy::kNon: return "Non";
  }
  return "?";
}

double payoff(double theta, Strategy s, const WebsiteParams& w, double price) {
  switch (s) {
    case Strategy::kVip: return theta * w.q_vip - w.sigma * price;
    case Strategy::kRegular: return theta * w.q_regular - price;
    case Strategy::kNon: return theta * w.q_non;
  }
  return 0.0;
}

Thresholds thresholds(const WebsiteParams& w, double price, double theta_max) {
  Thresholds t;
  t.t12 = std::min((w.sigma - 1.0) * price / (w.q_vip - w.q_regular), theta_max);
  t.t13 = std::min(w.sigma * price / (w.q_vip - w.q_non), theta_max);
  t.t23 = std::min(price / (w.q_regular - w.q_non), theta_max);
  t.sigma_threshold = sigma_threshold(w);
  return t;
}

Strategy optimal_strategy(double theta, const Thresholds& t, double sigma) {
  if (sigma > t.sigma_threshold) {
    if (theta >= t.t12) return Strategy::kVip;
    if (theta >= t.t23) return Strategy::kRegular;
    return Strategy::kNon;
  }
  return theta >= t.t13 ? Strategy::kVip : Strategy::kNon;
}

MembershipShares membership_shares(const WebsiteParams& w, double price,
                                   double theta_max) {
  const double st = sigma_threshold(w);
  if (w.sigma < st * (1.0 - kRegimeSlack)) {
    throw RegimeError("membership shares need sigma >= sigma^T (sigma = " +
                      std::to_string(w.sigma) + ", sigma^T = " +
                      std::to_string(st) + ")");
  }
  if (price < 0.0) throw RegimeError("membership shares need price >= 0");
  const double dvr = w.q_vip - w.q_regular;
  const double drn = w.q_regular - w.q_non;
  const double raw_t12 = (w.sigma - 1.0) * price / dvr;
  if (raw_t12 > theta_max * (1.0 + kRegimeSlack)) {
    throw RegimeError("membership shares need t12 <= theta_max (t12 = " +
                      std::to_string(raw_t12) + ")");
  }

  MembershipShares s;
  s.vip = std::max(0.0, 1.0 - (w.sigma - 1.0) * price / (dvr * theta_max));
  s.regular = std::max(
      0.0, price * (w.sigma * drn - (w.q_vip - w.q_non)) / (dvr * drn * theta_max));
  s.non = price / (drn * theta_max);
  return s;
}

}  // namespace vwm
