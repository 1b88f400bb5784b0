#include "vwm/equilibrium.hpp"

#include <cstdio>

#include "vwm/csv.hpp"

namespace vwm {

std::string format_real(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

EquilibriumReport solve_equilibrium(const MarketConfig& config) {
  const StageTwoSolution stage_two = solve_stage_two(config);
  const AdvertiserModel model(stage_two, config);
  const BudgetSolution budget = optimal_budget(model);
  const std::vector<double> spaces = ad_allocation(stage_two.ads, budget.budget);

  EquilibriumReport r;
  r.subset = stage_two.ads.subset;
  r.budget = budget.budget;
  r.advertiser_utility = budget.utility;
  r.t_min = model.schedule().t_min;
  r.t_max = model.schedule().t_max;
  r.websites.resize(config.websites.size());
  for (std::size_t k = 0; k < r.websites.size(); ++k) {
    WebsiteOutcome& o = r.websites[k];
    const int ki = static_cast<int>(k);
    o.price = stage_two.prices[k].price;
    o.vip_price = config.websites[k].sigma * o.price;
    o.shares = stage_two.shares[k];
    o.ad_cost = config.websites[k].ad_cost;
    o.spaces = spaces[k];
    o.membership_utility = stage_two.membership_utility[k];
    o.ad_utility = budget.budget > 0.0
                       ? ad_utility(ki, spaces, config.websites[k].ad_cost, budget.budget)
                       : 0.0;
    o.total_utility = o.membership_utility + o.ad_utility;
    o.participates = stage_two.ads.contains(ki);
    o.saturation_threshold = model.schedule().thresholds[k];
    o.watch_prob = budget.watch_prob[k];
    for (int s : budget.saturated) o.saturated = o.saturated || s == ki;
  }
  return r;
}

void write_report_csv(std::ostream& os, const EquilibriumReport& r) {
  os << "k,in_k_bar,p_star,sigma_p_star,chi_V,chi_R,chi_N,M_star,V_M,V_A,V_VW,"
        "P_T,tau,saturated\n";
  for (std::size_t k = 0; k < r.websites.size(); ++k) {
    const WebsiteOutcome& o = r.websites[k];
    os << k + 1 << ',' << (o.participates ? 1 : 0) << ',' << format_real(o.price)
       << ',' << format_real(o.vip_price) << ',' << format_real(o.shares.vip)
       << ',' << format_real(o.shares.regular) << ','
       << format_real(o.shares.non) << ',' << format_real(o.spaces) << ','
       << format_real(o.membership_utility) << ',' << format_real(o.ad_utility)
       << ',' << format_real(o.total_utility) << ',';
    if (o.participates) os << format_real(o.saturation_threshold);
    os << ',' << format_real(o.watch_prob) << ',' << (o.saturated ? 1 : 0) << '\n';
  }
}

void write_report_summary(std::ostream& os, const EquilibriumReport& r) {
  os << "participating websites (" << r.subset.size() << "):";
  for (std::size_t k = 0; k < r.websites.size(); ++k)
    if (r.websites[k].participates) os << ' ' << k + 1;
  os << "\noptimal advertising budget P_a* = " << format_real(r.budget)
     << "\nadvertiser utility V_AD = " << format_real(r.advertiser_utility)
     << "\nsaturation thresholds: min " << format_real(r.t_min) << ", max "
     << format_real(r.t_max) << "\n\n";
  os << "  k   p*          sigma*p*    chi_V       chi_R       chi_N       M*"
        "          V_M         V_A         V_VW\n";
  for (std::size_t k = 0; k < r.websites.size(); ++k) {
    const WebsiteOutcome& o = r.websites[k];
    char line[256];
    std::snprintf(line, sizeof line,
                  "%3zu%c %-11.5g %-11.5g %-11.5g %-11.5g %-11.5g %-11.5g %-11.5g "
                  "%-11.5g %-11.5g\n",
                  k + 1, o.participates ? '*' : ' ', o.price, o.vip_price,
                  o.shares.vip, o.shares.regular, o.shares.non, o.spaces,
                  o.membership_utility, o.ad_utility, o.total_utility);
    os << line;
  }
}

}  // namespace vwm
