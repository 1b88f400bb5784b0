#ifndef VWM_KERNELS_HPP_
#define VWM_KERNELS_HPP_

// Brute-force inner loops behind the oracles. Each kernel has a serial
// reference (`*_serial`) and an OpenMP version; both produce bit-identical
// results because every trial draws from its own (seed, index) stream and
// grid maxima break ties toward the lowest index.

#include <cstddef>
#include <cstdint>

#include "vwm/advertiser.hpp"
#include "vwm/market.hpp"

namespace vwm::kernels {

struct ChoiceCounts {
  std::uint64_t vip = 0;
  std::uint64_t regular = 0;
  std::uint64_t non = 0;

  bool operator==(const ChoiceCounts&) const = default;
};

struct GridMax {
  double value = 0.0;
  std::size_t index = 0;
  double location = 0.0;

  bool operator==(const GridMax&) const = default;
};

// Samples theta ~ U[0, theta_max] and tallies the payoff-maximizing strategy
// (evaluated directly, not through thresholds).
ChoiceCounts count_user_choices_serial(const WebsiteParams& w, double price,
                                       double theta_max, std::uint64_t trials,
                                       std::uint64_t seed);
ChoiceCounts count_user_choices(const WebsiteParams& w, double price,
                                double theta_max, std::uint64_t trials,
                                std::uint64_t seed);

// Smallest x with P[X <= x] >= u for X ~ Poisson(mean).
int poisson_inverse_cdf(double mean, double u);

// Number of trials in which a user with Poisson(visit_rate) visits sees a
// specific ad at least once, each visit showing it with per_visit_prob.
std::uint64_t count_ad_seen_serial(double per_visit_prob, double visit_rate,
                                   std::uint64_t trials, std::uint64_t seed);
std::uint64_t count_ad_seen(double per_visit_prob, double visit_rate,
                            std::uint64_t trials, std::uint64_t seed);

// Advertiser utility maximized over `points` evenly spaced budgets on [0, hi].
GridMax budget_grid_max_serial(const AdvertiserModel& model, double hi,
                               std::size_t points);
GridMax budget_grid_max(const AdvertiserModel& model, double hi,
                        std::size_t points);

// One website's AD-space utility maximized over `points` evenly spaced
// quantities on [0, hi] with the rivals' total fixed at `others`.
GridMax deviation_grid_max_serial(double others, double cost, double budget,
                                  double hi, std::size_t points);
GridMax deviation_grid_max(double others, double cost, double budget, double hi,
                           std::size_t points);

}  // namespace vwm::kernels

#endif  // VWM_KERNELS_HPP_
