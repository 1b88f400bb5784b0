#include "vwm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "vwm/kernels.hpp"
#include "vwm/rng.hpp"
#include "vwm/users.hpp"

namespace vwm {

namespace {

void finish(OracleReport& r) {
  r.abs_err = std::abs(r.oracle_value - r.closed_form);
  r.rel_err = r.closed_form != 0.0 ? r.abs_err / std::abs(r.closed_form)
              : r.abs_err == 0.0   ? 0.0
                                   : std::numeric_limits<double>::infinity();
  r.pass = (r.metric == ErrorMetric::kAbsolute ? r.abs_err : r.rel_err) <= r.tolerance;
}

}  // namespace

std::array<OracleReport, 3> user_choice_oracle(const WebsiteParams& w,
                                               double price, double theta_max,
                                               std::uint64_t trials,
                                               std::uint64_t seed) {
  if (trials < 10'000) throw std::invalid_argument("user_choice_oracle needs >= 1e4 trials");
  const MembershipShares closed = membership_shares(w, price, theta_max);
  const kernels::ChoiceCounts counts =
      kernels::count_user_choices(w, price, theta_max, trials, seed);
  const double n = static_cast<double>(trials);
  const double tol = 3.0 * std::sqrt(0.25 / n);

  std::array<OracleReport, 3> out;
  const char* names[] = {"user_choice.vip", "user_choice.regular", "user_choice.non"};
  const double closed_v[] = {closed.vip, closed.regular, closed.non};
  const double counts_v[] = {static_cast<double>(counts.vip),
                             static_cast<double>(counts.regular),
                             static_cast<double>(counts.non)};
  for (int i = 0; i < 3; ++i) {
    OracleReport& r = out[i];
    r.name = names[i];
    r.closed_form = closed_v[i];
    r.oracle_value = counts_v[i] / n;
    r.samples = trials;
    r.tolerance = tol;
    r.metric = ErrorMetric::kAbsolute;
    finish(r);
  }
  return out;
}

std::vector<OracleReport> nash_deviation_oracle(const AdSpaceEquilibrium& eq,
                                                std::span<const double> costs,
                                                double budget, std::size_t grid) {
  if (!(budget > 0.0)) throw std::invalid_argument("nash_deviation_oracle needs budget > 0");
  if (grid < 1000) throw std::invalid_argument("nash_deviation_oracle needs grid >= 1e3");
  const std::vector<double> spaces = ad_allocation(eq, budget);
  double total = 0.0;
  for (double m : spaces) total += m;

  std::vector<OracleReport> out;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    const double others = total - spaces[k];
    OracleReport r;
    r.name = "nash_deviation[" + std::to_string(k + 1) + "]";
    r.closed_form = ad_utility(static_cast<int>(k), spaces, costs[k], budget);
    const kernels::GridMax best =
        kernels::deviation_grid_max(others, costs[k], budget, 2.0 * total, grid);
    r.oracle_value = best.value;
    r.location = best.location;
    r.samples = grid;
    r.tolerance = 1e-9 * budget;
    r.metric = ErrorMetric::kAbsolute;
    finish(r);
    // Only gains count against the equilibrium; a coarse grid that misses
    // M_k^* is expected to come out below it.
    r.abs_err = std::max(0.0, r.oracle_value - r.closed_form);
    r.rel_err = r.closed_form != 0.0 ? r.abs_err / std::abs(r.closed_form) : r.abs_err;
    r.pass = r.abs_err <= r.tolerance;
    out.push_back(std::move(r));
  }
  return out;
}

OracleReport budget_grid_oracle(const AdvertiserModel& model, std::size_t grid) {
  if (grid < 100'000) throw std::invalid_argument("budget_grid_oracle needs grid >= 1e5");
  const BudgetSolution sol = optimal_budget(model);
  const kernels::GridMax best =
      kernels::budget_grid_max(model, model.schedule().t_max, grid);

  OracleReport r;
  r.name = "budget_grid";
  r.closed_form = sol.utility;
  r.oracle_value = best.value;
  r.location = best.location;
  r.samples = grid;
  r.tolerance = 1e-3;
  r.metric = ErrorMetric::kRelative;
  // Shortfall of the algorithm against the grid; beating the grid is fine.
  r.abs_err = std::max(0.0, best.value - sol.utility);
  r.rel_err = r.abs_err / std::max(1.0, std::abs(best.value));
  r.pass = r.rel_err <= r.tolerance;
  return r;
}

OracleReport poisson_watch_oracle(double spaces, int ad_count, double popularity,
                                  std::int64_t user_count, double non_share,
                                  double visit_rate, std::uint64_t trials,
                                  std::uint64_t seed) {
  if (trials < 100'000) throw std::invalid_argument("poisson_watch_oracle needs >= 1e5 trials");
  const double viewers = popularity * static_cast<double>(user_count) * non_share;
  const double per_visit =
      std::min(spaces / (ad_count * visit_rate * viewers), 1.0 / ad_count);

  OracleReport r;
  r.name = "poisson_watch";
  r.closed_form = ad_watch_probability(spaces, ad_count, popularity, user_count,
                                       non_share, visit_rate);
  r.oracle_value =
      static_cast<double>(kernels::count_ad_seen(per_visit, visit_rate, trials, seed)) /
      static_cast<double>(trials);
  r.samples = trials;
  r.tolerance =
      3.0 * std::sqrt(r.closed_form * (1.0 - r.closed_form) / static_cast<double>(trials));
  r.metric = ErrorMetric::kAbsolute;
  finish(r);
  return r;
}

std::vector<OracleReport> verify_equilibrium(const MarketConfig& config,
                                             const VerifyOptions& options) {
  const StageTwoSolution stage_two = solve_stage_two(config);
  const AdvertiserModel model(stage_two, config);
  const BudgetSolution budget = optimal_budget(model);
  const std::size_t n = config.websites.size();

  std::vector<OracleReport> out;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t seed = SplitMix64::mix(config.rng_seed + 0x1000 + k);
    for (OracleReport r : user_choice_oracle(config.websites[k], stage_two.prices[k].price,
                                             config.theta_max, options.user_trials, seed)) {
      r.name += "[" + std::to_string(k + 1) + "]";
      out.push_back(std::move(r));
    }
  }

  std::vector<double> costs(n);
  for (std::size_t k = 0; k < n; ++k) costs[k] = config.websites[k].ad_cost;
  const double nash_budget = budget.budget > 0.0 ? budget.budget : 1.0;
  for (auto& r : nash_deviation_oracle(stage_two.ads, costs, nash_budget, options.nash_grid))
    out.push_back(std::move(r));

  out.push_back(budget_grid_oracle(model, options.budget_grid));

  const std::vector<double> spaces = ad_allocation(stage_two.ads, budget.budget);
  for (int k : stage_two.ads.subset) {
    const double phi = stage_two.popularity.phi[k];
    const double non = stage_two.shares[k].non;
    const std::uint64_t seed = SplitMix64::mix(config.rng_seed + 0x2000 + k);
    OracleReport r = poisson_watch_oracle(spaces[k], config.ad_count, phi, config.user_count,
                                          non, config.visit_rate, options.poisson_trials, seed);
    r.name += "[" + std::to_string(k + 1) + "]";
    out.push_back(std::move(r));
  }
  // One saturated point: twice the view capacity of the first participant.
  {
    const int k = stage_two.ads.subset.front();
    const double phi = stage_two.popularity.phi[k];
    const double non = stage_two.shares[k].non;
    const double capacity =
        config.visit_rate * phi * static_cast<double>(config.user_count) * non;
    OracleReport r = poisson_watch_oracle(2.0 * capacity, config.ad_count, phi,
                                          config.user_count, non, config.visit_rate,
                                          options.poisson_trials,
                                          SplitMix64::mix(config.rng_seed + 0x3000));
    r.name += ".saturated[" + std::to_string(k + 1) + "]";
    out.push_back(std::move(r));
  }
  return out;
}

void write_oracle_table(std::ostream& os, std::span<const OracleReport> reports) {
  char line[256];
  std::snprintf(line, sizeof line, "%-30s %-16s %-16s %-11s %-11s %-11s %s\n", "check",
                "closed_form", "oracle", "abs_err", "rel_err", "tolerance", "result");
  os << line;
  for (const OracleReport& r : reports) {
    std::snprintf(line, sizeof line, "%-30s %-16.10g %-16.10g %-11.3g %-11.3g %-11.3g%s %s\n",
                  r.name.c_str(), r.closed_form, r.oracle_value, r.abs_err, r.rel_err,
                  r.tolerance, r.metric == ErrorMetric::kRelative ? "r" : "a",
                  r.pass ? "PASS" : "FAIL");
    os << line;
  }
}

}  // namespace vwm
