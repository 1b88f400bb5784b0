#include "vwm/websites.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace vwm {

double price_cap(const WebsiteParams& w, double theta_max) {
  return theta_max * (w.q_vip - w.q_regular) / (w.sigma - 1.0);
}

PriceChoice optimal_price(const WebsiteParams& w, double theta_max) {
  const double st = sigma_threshold(w);
  if (!(w.q_vip > w.q_regular && w.q_regular > w.q_non && w.q_non > 0.0))
    throw RegimeError("optimal price needs q_vip > q_regular > q_non > 0");
  if (w.sigma < st * (1.0 - 1e-12)) {
    throw RegimeError("optimal price is only derived for sigma >= sigma^T (sigma = " +
                      std::to_string(w.sigma) + ", sigma^T = " +
                      std::to_string(st) + ")");
  }
  const double dvr = w.q_vip - w.q_regular;
  const double drn = w.q_regular - w.q_non;
  const double s1 = w.sigma - 1.0;
  const double stationary =
      w.sigma * theta_max * dvr * drn / (2.0 * (s1 * s1 * drn + dvr));
  const double cap = price_cap(w, theta_max);
  if (stationary < cap) return {stationary, true};
  return {cap, false};
}

double membership_utility(const WebsiteParams& w, double popularity,
                          std::int64_t user_count, double price,
                          double theta_max) {
  const MembershipShares s = membership_shares(w, price, theta_max);
  return popularity * static_cast<double>(user_count) *
         (w.sigma * price * s.vip + price * s.regular);
}

bool AdSpaceEquilibrium::contains(int k) const {
  return std::find(subset.begin(), subset.end(), k) != subset.end();
}

AdSpaceEquilibrium participating_subset(std::span<const double> costs) {
  const int n = static_cast<int>(costs.size());
  if (n < 2) throw std::invalid_argument("AD-space game needs at least two websites");
  for (double c : costs)
    if (!(c > 0.0)) throw std::invalid_argument("AD-space costs must be positive");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return costs[a] < costs[b]; });

  std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + costs[order[i]];

  // Largest i in [2, n] with (i - 1) C_(i) < C_(1) + ... + C_(i); i = 2
  // always qualifies.
  int size = 2;
  for (int i = n; i >= 2; --i) {
    if ((i - 1) * costs[order[i - 1]] < prefix[i]) {
      size = i;
      break;
    }
  }

  AdSpaceEquilibrium eq;
  eq.subset.assign(order.begin(), order.begin() + size);
  eq.cost_sum = prefix[size];
  eq.coeff.assign(static_cast<std::size_t>(n), 0.0);
  const double m = size - 1;
  for (int k : eq.subset)
    eq.coeff[k] = m / eq.cost_sum * (1.0 - m * costs[k] / eq.cost_sum);
  return eq;
}

std::vector<double> ad_allocation(const AdSpaceEquilibrium& eq, double budget) {
  std::vector<double> spaces(eq.coeff.size());
  for (std::size_t k = 0; k < spaces.size(); ++k) spaces[k] = eq.coeff[k] * budget;
  return spaces;
}

double ad_utility(int k, std::span<const double> spaces, double cost,
                  double budget) {
  double others = 0.0;
  for (std::size_t j = 0; j < spaces.size(); ++j)
    if (static_cast<int>(j) != k) others += spaces[j];
  if (!(others > 0.0)) {
    throw std::domain_error(
        "AD-space utility undefined: the other websites sell no AD spaces "
        "(standing assumption sum_{j != k} M_j > 0)");
  }
  const double mine = spaces[k];
  return mine / (mine + others) * budget - cost * mine;
}

StageTwoSolution solve_stage_two(const MarketConfig& config) {
  require_valid(config);
  StageTwoSolution out;
  out.popularity = zipf_popularity(config.website_count, config.zipf_exponent);
  const std::size_t n = config.websites.size();
  out.prices.resize(n);
  out.shares.resize(n);
  out.membership_utility.resize(n);
  std::vector<double> costs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const WebsiteParams& w = config.websites[k];
    out.prices[k] = optimal_price(w, config.theta_max);
    out.shares[k] = membership_shares(w, out.prices[k].price, config.theta_max);
    out.membership_utility[k] =
        membership_utility(w, out.popularity.phi[k], config.user_count,
                           out.prices[k].price, config.theta_max);
    costs[k] = w.ad_cost;
  }
  out.ads = participating_subset(costs);
  return out;
}

}  // namespace vwm
