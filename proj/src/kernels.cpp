#include "vwm/kernels.hpp"

#include <cmath>
#include <limits>

#include "vwm/rng.hpp"
#include "vwm/users.hpp"

namespace vwm::kernels {

namespace {

inline Strategy best_response(const WebsiteParams& w, double price, double theta) {
  const double vip = payoff(theta, Strategy::kVip, w, price);
  const double reg = payoff(theta, Strategy::kRegular, w, price);
  const double non = payoff(theta, Strategy::kNon, w, price);
  if (vip >= reg && vip >= non) return Strategy::kVip;
  if (reg >= non) return Strategy::kRegular;
  return Strategy::kNon;
}

inline Strategy user_trial(const WebsiteParams& w, double price, double theta_max,
                           std::uint64_t seed, std::uint64_t i) {
  SplitMix64 rng = SplitMix64::stream(seed, i);
  return best_response(w, price, theta_max * rng.uniform());
}

inline bool ad_trial(double q, double visit_rate, std::uint64_t seed,
                     std::uint64_t i) {
  SplitMix64 rng = SplitMix64::stream(seed, i);
  const int visits = poisson_inverse_cdf(visit_rate, rng.uniform());
  for (int v = 0; v < visits; ++v)
    if (rng.uniform() < q) return true;
  return false;
}

inline double grid_point(double hi, std::size_t i, std::size_t points) {
  return points < 2 ? 0.0 : hi * static_cast<double>(i) / static_cast<double>(points - 1);
}

inline double deviation_value(double mine, double others, double cost,
                              double budget) {
  return mine / (mine + others) * budget - cost * mine;
}

constexpr GridMax kEmpty{-std::numeric_limits<double>::infinity(),
                         std::numeric_limits<std::size_t>::max(), 0.0};

inline void merge(GridMax& best, const GridMax& other) {
  if (other.value > best.value ||
      (other.value == best.value && other.index < best.index))
    best = other;
}

template <typename Eval>
GridMax grid_max_serial(Eval eval, double hi, std::size_t points) {
  GridMax best = kEmpty;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = grid_point(hi, i, points);
    const double v = eval(x);
    if (v > best.value) best = {v, i, x};
  }
  return best;
}

template <typename Eval>
GridMax grid_max_parallel(Eval eval, double hi, std::size_t points) {
  GridMax best = kEmpty;
  const auto n = static_cast<std::int64_t>(points);
#pragma omp parallel
  {
    GridMax local = kEmpty;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      const double x = grid_point(hi, idx, points);
      const double v = eval(x);
      if (v > local.value) local = {v, idx, x};
    }
#pragma omp critical(vwm_grid_merge)
    merge(best, local);
  }
  return best;
}

}  // namespace

ChoiceCounts count_user_choices_serial(const WebsiteParams& w, double price,
                                       double theta_max, std::uint64_t trials,
                                       std::uint64_t seed) {
  ChoiceCounts c;
  for (std::uint64_t i = 0; i < trials; ++i) {
    switch (user_trial(w, price, theta_max, seed, i)) {
      case Strategy::kVip: ++c.vip; break;
      case Strategy::kRegular: ++c.regular; break;
      case Strategy::kNon: ++c.non; break;
    }
  }
  return c;
}

ChoiceCounts count_user_choices(const WebsiteParams& w, double price,
                                double theta_max, std::uint64_t trials,
                                std::uint64_t seed) {
  std::uint64_t vip = 0, regular = 0, non = 0;
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) reduction(+ : vip, regular, non)
  for (std::int64_t i = 0; i < n; ++i) {
    switch (user_trial(w, price, theta_max, seed, static_cast<std::uint64_t>(i))) {
      case Strategy::kVip: ++vip; break;
      case Strategy::kRegular: ++regular; break;
      case Strategy::kNon: ++non; break;
    }
  }
  return {vip, regular, non};
}

int poisson_inverse_cdf(double mean, double u) {
  double p = std::exp(-mean);
  double cdf = p;
  int x = 0;
  // Past ~mean + 40 sqrt(mean) the tail mass is below double resolution.
  const int limit = static_cast<int>(mean + 40.0 * std::sqrt(mean) + 40.0);
  while (u > cdf && x < limit) {
    ++x;
    p *= mean / x;
    cdf += p;
  }
  return x;
}

std::uint64_t count_ad_seen_serial(double per_visit_prob, double visit_rate,
                                   std::uint64_t trials, std::uint64_t seed) {
  std::uint64_t seen = 0;
  for (std::uint64_t i = 0; i < trials; ++i)
    if (ad_trial(per_visit_prob, visit_rate, seed, i)) ++seen;
  return seen;
}

std::uint64_t count_ad_seen(double per_visit_prob, double visit_rate,
                            std::uint64_t trials, std::uint64_t seed) {
  std::uint64_t seen = 0;
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) reduction(+ : seen)
  for (std::int64_t i = 0; i < n; ++i)
    if (ad_trial(per_visit_prob, visit_rate, seed, static_cast<std::uint64_t>(i)))
      ++seen;
  return seen;
}

GridMax budget_grid_max_serial(const AdvertiserModel& model, double hi,
                               std::size_t points) {
  return grid_max_serial([&](double b) { return advertiser_utility(model, b); },
                         hi, points);
}

GridMax budget_grid_max(const AdvertiserModel& model, double hi,
                        std::size_t points) {
  return grid_max_parallel([&](double b) { return advertiser_utility(model, b); },
                           hi, points);
}

GridMax deviation_grid_max_serial(double others, double cost, double budget,
                                  double hi, std::size_t points) {
  return grid_max_serial(
      [&](double m) { return deviation_value(m, others, cost, budget); }, hi, points);
}

GridMax deviation_grid_max(double others, double cost, double budget, double hi,
                           std::size_t points) {
  return grid_max_parallel(
      [&](double m) { return deviation_value(m, others, cost, budget); }, hi, points);
}

}  // namespace vwm::kernels
