#include "vwm/advertiser.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vwm {

double ad_watch_probability(double spaces, int ad_count, double popularity,
                            std::int64_t user_count, double non_share,
                            double visit_rate) {
  const double viewers = popularity * static_cast<double>(user_count) * non_share;
  if (spaces < visit_rate * viewers)
    return -std::expm1(-spaces / (ad_count * viewers));
  return -std::expm1(-visit_rate / ad_count);
}

SaturationSchedule saturation_schedule(const AdSpaceEquilibrium& eq,
                                       std::span<const double> non_shares,
                                       const MarketConfig& config) {
  const Popularity pop = zipf_popularity(config.website_count, config.zipf_exponent);
  SaturationSchedule s;
  s.thresholds.assign(eq.coeff.size(), 0.0);
  for (int k : eq.subset) {
    const double capacity = config.visit_rate * pop.phi[k] *
                            static_cast<double>(config.user_count) * non_shares[k];
    s.thresholds[k] = capacity / eq.coeff[k];
  }
  s.alpha = eq.subset;
  std::stable_sort(s.alpha.begin(), s.alpha.end(), [&](int a, int b) {
    return s.thresholds[a] < s.thresholds[b];
  });
  if (!s.alpha.empty()) {
    s.t_min = s.thresholds[s.alpha.front()];
    s.t_max = s.thresholds[s.alpha.back()];
  }
  return s;
}

AdvertiserModel::AdvertiserModel(const StageTwoSolution& stage_two,
                                 const MarketConfig& config)
    : stage_two_(stage_two), config_(config) {
  const std::size_t n = stage_two_.shares.size();
  impressions_.resize(n);
  std::vector<double> non(n);
  for (std::size_t k = 0; k < n; ++k) {
    non[k] = stage_two_.shares[k].non;
    impressions_[k] = config_.ad_count * stage_two_.popularity.phi[k] *
                      static_cast<double>(config_.user_count) * non[k];
  }
  schedule_ = saturation_schedule(stage_two_.ads, non, config_);
}

double AdvertiserModel::watch_probability(int k, double budget) const {
  return ad_watch_probability(coeff(k) * budget, config_.ad_count,
                              stage_two_.popularity.phi[k], config_.user_count,
                              stage_two_.shares[k].non, config_.visit_rate);
}

double advertiser_utility(const AdvertiserModel& model, double budget) {
  double gain = 0.0;
  for (int k : model.ads().subset)
    gain += model.reward(k) * model.impressions(k) * model.watch_probability(k, budget);
  return gain - budget;
}

double relaxed_derivative(const AdvertiserModel& model, std::size_t saturated,
                          double budget) {
  const auto& alpha = model.schedule().alpha;
  double d = 0.0;
  for (std::size_t i = saturated; i < alpha.size(); ++i) {
    const int k = alpha[i];
    const double a = model.coeff(k);
    d += model.reward(k) * a * std::exp(-a * budget / model.impressions(k));
  }
  return d - 1.0;
}

double relaxed_objective(const AdvertiserModel& model, std::size_t saturated,
                         double budget) {
  const auto& alpha = model.schedule().alpha;
  const double cap = -std::expm1(-model.config().visit_rate / model.config().ad_count);
  double v = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const int k = alpha[i];
    const double scale = model.reward(k) * model.impressions(k);
    if (i < saturated) {
      v += scale * cap;
    } else {
      v += scale * -std::expm1(-model.coeff(k) * budget / model.impressions(k));
    }
  }
  return v - budget;
}

double relaxed_optimum(const AdvertiserModel& model, std::size_t saturated) {
  if (saturated >= model.schedule().alpha.size())
    throw std::invalid_argument("relaxed optimum needs at least one unsaturated website");
  if (relaxed_derivative(model, saturated, 0.0) <= 0.0) return 0.0;

  double lo = 0.0, hi = 1.0;
  while (relaxed_derivative(model, saturated, hi) >= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::runtime_error("relaxed optimum: no bracket");
  }
  const double tol = 1e-9 * (1.0 + hi);
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (relaxed_derivative(model, saturated, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BudgetSolution optimal_budget(const AdvertiserModel& model) {
  const SaturationSchedule& sched = model.schedule();
  const std::size_t n = sched.alpha.size();

  double budget = relaxed_optimum(model, 0);
  if (budget > sched.t_min) {
    // Largest k in [1, n-1] whose relaxed optimum with the first k ranks
    // saturated still lies at or past the k-th threshold.
    std::size_t best = 0;
    for (std::size_t k = n - 1; k >= 1; --k) {
      if (relaxed_optimum(model, k) >= sched.at_rank(k - 1)) {
        best = k;
        break;
      }
    }
    if (best > 0) {
      budget = std::min(relaxed_optimum(model, best), sched.at_rank(best));
    } else {
      budget = sched.t_min;
    }
  }

  BudgetSolution out;
  out.budget = budget;
  for (int k : sched.alpha)
    if (sched.thresholds[k] <= budget) out.saturated.push_back(k);
  out.utility = advertiser_utility(model, budget);
  out.watch_prob.assign(model.ads().coeff.size(), 0.0);
  for (int k : model.ads().subset) out.watch_prob[k] = model.watch_probability(k, budget);
  return out;
}

}  // namespace vwm
