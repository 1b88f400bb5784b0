#ifndef VWM_ORACLE_HPP_
#define VWM_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vwm/advertiser.hpp"
#include "vwm/market.hpp"
#include "vwm/websites.hpp"

namespace vwm {

enum class ErrorMetric { kAbsolute, kRelative };

// Outcome of checking one closed form against a brute-force estimate.
// pass is decided on abs_err or rel_err according to `metric`.
struct OracleReport {
  std::string name;
  double closed_form = 0.0;
  double oracle_value = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::uint64_t samples = 0;  // trials or grid points
  double tolerance = 0.0;
  ErrorMetric metric = ErrorMetric::kAbsolute;
  double location = 0.0;      // grid argmax, where meaningful
  bool pass = false;

  bool operator==(const OracleReport&) const = default;
};

// Empirical VIP/Regular/Non shares of payoff-maximizing users versus the
// closed-form shares. Tolerance 3 sqrt(0.25 / n). Needs n >= 1e4.
std::array<OracleReport, 3> user_choice_oracle(const WebsiteParams& w,
                                               double price, double theta_max,
                                               std::uint64_t trials,
                                               std::uint64_t seed);

// Unilateral deviations of every website (participating or not) from the
// closed-form allocation, over `grid` points on [0, 2 sum M*]. Passes when no
// deviation gains more than 1e-9 * budget. Needs budget > 0, grid >= 1e3.
std::vector<OracleReport> nash_deviation_oracle(const AdSpaceEquilibrium& eq,
                                                std::span<const double> costs,
                                                double budget, std::size_t grid);

// Uniform grid search of the advertiser utility on [0, P^{T,max}] against
// the optimal budget; 0.1% relative tolerance on utility. Needs grid >= 1e5.
OracleReport budget_grid_oracle(const AdvertiserModel& model, std::size_t grid);

// Monte Carlo of Poisson visits showing the ad with its per-visit
// probability; compared to the closed-form watch probability within three
// binomial standard errors. Needs trials >= 1e5.
OracleReport poisson_watch_oracle(double spaces, int ad_count, double popularity,
                                  std::int64_t user_count, double non_share,
                                  double visit_rate, std::uint64_t trials,
                                  std::uint64_t seed);

struct VerifyOptions {
  std::uint64_t user_trials = 1'000'000;
  std::uint64_t poisson_trials = 1'000'000;
  std::size_t nash_grid = 1000;
  std::size_t budget_grid = 100'000;
};

// Every oracle against the solved equilibrium of `config`.
std::vector<OracleReport> verify_equilibrium(const MarketConfig& config,
                                             const VerifyOptions& options = {});

void write_oracle_table(std::ostream& os, std::span<const OracleReport> reports);

}  // namespace vwm

#endif  // VWM_ORACLE_HPP_
