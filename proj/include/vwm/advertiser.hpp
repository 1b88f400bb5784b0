#ifndef VWM_ADVERTISER_HPP_
#define VWM_ADVERTISER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "vwm/market.hpp"
#include "vwm/websites.hpp"

namespace vwm {

// Probability that one specific ad is seen at least once by a Non-Member of
// website k with Poisson(xi) visits, given M_k AD spaces. Once M_k reaches
// the expected Non-Member visit volume xi*phi*N*chi_N the per-visit
// probability caps at 1/G and this returns 1 - exp(-xi/G).
double ad_watch_probability(double spaces, int ad_count, double popularity,
                            std::int64_t user_count, double non_share,
                            double visit_rate);

// Budgets at which each participating website's linear allocation reaches
// its view capacity, and their ascending order alpha.
struct SaturationSchedule {
  std::vector<double> thresholds;  // length K, 0 outside the subset
  std::vector<int> alpha;          // subset indices, ascending threshold
  double t_min = 0.0;
  double t_max = 0.0;

  double at_rank(std::size_t i) const { return thresholds[alpha[i]]; }
};

SaturationSchedule saturation_schedule(const AdSpaceEquilibrium& eq,
                                       std::span<const double> non_shares,
                                       const MarketConfig& config);

// Everything the advertiser needs from Stages II/III, precomputed per
// website. Immutable; safe to share across threads.
class AdvertiserModel {
 public:
  AdvertiserModel(const StageTwoSolution& stage_two, const MarketConfig& config);

  const MarketConfig& config() const { return config_; }
  const StageTwoSolution& stage_two() const { return stage_two_; }
  const SaturationSchedule& schedule() const { return schedule_; }
  const AdSpaceEquilibrium& ads() const { return stage_two_.ads; }

  // A_k: spaces per unit budget.
  double coeff(int k) const { return stage_two_.ads.coeff[k]; }
  // B_k = G phi_k N chi_k^N: expected ad impressions scale.
  double impressions(int k) const { return impressions_[k]; }
  double reward(int k) const { return config_.websites[k].reward; }

  // Watch probability of website k when the advertiser spends `budget`.
  double watch_probability(int k, double budget) const;

 private:
  StageTwoSolution stage_two_;
  MarketConfig config_;
  std::vector<double> impressions_;
  SaturationSchedule schedule_;
};

// Advertiser payoff: rewarded watches over participating websites minus
// the budget.
double advertiser_utility(const AdvertiserModel& model, double budget);

// Derivative of the relaxed objective in which the first `saturated` ranks
// of alpha are held at their capped watch probability.
double relaxed_derivative(const AdvertiserModel& model, std::size_t saturated,
                          double budget);

// Relaxed objective value (same prefix convention as relaxed_derivative).
double relaxed_objective(const AdvertiserModel& model, std::size_t saturated,
                         double budget);

// Unique maximizer of the relaxed objective over [0, inf). Requires
// saturated < |subset|. Bisection on the strictly decreasing derivative.
double relaxed_optimum(const AdvertiserModel& model, std::size_t saturated);

struct BudgetSolution {
  double budget = 0.0;
  std::vector<int> saturated;       // alpha-prefix saturated at the optimum
  double utility = 0.0;
  std::vector<double> watch_prob;   // length K
};

BudgetSolution optimal_budget(const AdvertiserModel& model);

}  // namespace vwm

#endif  // VWM_ADVERTISER_HPP_
