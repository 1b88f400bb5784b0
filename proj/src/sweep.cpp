#include "vwm/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>

#include "vwm/config_io.hpp"
#include "vwm/csv.hpp"
#include "vwm/websites.hpp"

namespace vwm {

const char* to_string(SweepParam p) {
  switch (p) {
    case SweepParam::kSigmaMultiplier: return "sigma_multiplier";
    case SweepParam::kGamma: return "gamma";
    case SweepParam::kAdCostUniformMax: return "ad_cost_uniform_max";
    case SweepParam::kAdCostCommon: return "ad_cost_common";
    case SweepParam::kXi: return "xi";
  }
  return "?";
}

std::optional<SweepParam> parse_sweep_param(const std::string& name) {
  for (SweepParam p : {SweepParam::kSigmaMultiplier, SweepParam::kGamma,
                       SweepParam::kAdCostUniformMax, SweepParam::kAdCostCommon,
                       SweepParam::kXi}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

namespace {

double to_real(const std::string& s) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number '" + s + "' in range");
  }
  if (used != s.size() || !std::isfinite(x))
    throw std::invalid_argument("bad number '" + s + "' in range");
  return x;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step");
    const double start = to_real(parts[0]);
    const double stop = to_real(parts[1]);
    const double step = to_real(parts[2]);
    if (!(step > 0.0)) throw std::invalid_argument("range step must be > 0");
    if (start > stop) throw std::invalid_argument("range start must be <= stop");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
  } else {
    for (const auto& part : split(text, ',')) values.push_back(to_real(part));
    if (values.empty()) throw std::invalid_argument("empty range");
  }
  return values;
}

MarketConfig apply_sweep_value(const MarketConfig& base, SweepParam p, double value) {
  MarketConfig cfg = base;
  switch (p) {
    case SweepParam::kSigmaMultiplier:
      for (auto& w : cfg.websites) w.sigma = value * sigma_threshold(w);
      break;
    case SweepParam::kGamma:
      cfg.zipf_exponent = value;
      break;
    case SweepParam::kAdCostUniformMax: {
      const auto costs = uniform_costs(cfg.website_count, 1.0, value, cfg.rng_seed);
      for (std::size_t k = 0; k < cfg.websites.size(); ++k) cfg.websites[k].ad_cost = costs[k];
      break;
    }
    case SweepParam::kAdCostCommon:
      for (auto& w : cfg.websites) w.ad_cost = value;
      break;
    case SweepParam::kXi:
      cfg.visit_rate = value;
      break;
  }
  return cfg;
}

namespace {

SweepRow solve_point(const MarketConfig& base, SweepParam p, double value) {
  SweepRow row;
  row.value = value;
  const MarketConfig cfg = apply_sweep_value(base, p, value);
  row.report = solve_equilibrium(cfg);
  if (p == SweepParam::kAdCostUniformMax) {
    double total = 0.0;
    for (int s = 0; s < kSubsetSeeds; ++s) {
      const auto costs = uniform_costs(cfg.website_count, 1.0, value,
                                       base.rng_seed + static_cast<std::uint64_t>(s));
      total += static_cast<double>(participating_subset(costs).subset.size());
    }
    row.mean_subset_size = total / kSubsetSeeds;
  }
  return row;
}

}  // namespace

SweepResult run_sweep(const MarketConfig& base, const SweepSpec& spec, int jobs) {
  SweepResult result{spec.parameter, {}};
  const auto n = static_cast<std::int64_t>(spec.values.size());
  result.rows.resize(spec.values.size());
  std::vector<std::exception_ptr> errors(spec.values.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      result.rows[i] = solve_point(base, spec.parameter, spec.values[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return result;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  const bool with_mean = result.parameter == SweepParam::kAdCostUniformMax;
  const std::size_t k_count =
      result.rows.empty() ? 0 : result.rows.front().report.websites.size();
  const char* per_site[] = {"p_star", "sigma_p_star", "chi_V", "chi_R", "chi_N", "M_star",
                            "V_M",    "V_A",          "V_VW",  "tau",   "P_T"};

  os << to_string(result.parameter)
     << ",k_bar_size,k_bar,P_a_star,V_AD,mean_M_star,mean_cost_M_star";
  if (with_mean) os << ",mean_k_bar_size";
  for (const char* name : per_site)
    for (std::size_t k = 1; k <= k_count; ++k) os << ',' << name << '_' << k;
  os << '\n';

  for (const SweepRow& row : result.rows) {
    const EquilibriumReport& r = row.report;
    double mean_m = 0.0, mean_cm = 0.0;
    for (int k : r.subset) {
      mean_m += r.websites[k].spaces;
      mean_cm += r.websites[k].ad_cost * r.websites[k].spaces;
    }
    const double size = static_cast<double>(r.subset.size());
    mean_m /= size;
    mean_cm /= size;

    os << format_real(row.value) << ',' << r.subset.size() << ',';
    std::vector<int> members = r.subset;
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) os << (i ? " " : "") << members[i] + 1;
    os << ',' << format_real(r.budget) << ',' << format_real(r.advertiser_utility) << ','
       << format_real(mean_m) << ',' << format_real(mean_cm);
    if (with_mean) os << ',' << format_real(row.mean_subset_size);
    auto column = [&](auto get) {
      for (const WebsiteOutcome& o : r.websites) os << ',' << get(o);
    };
    column([](const WebsiteOutcome& o) { return format_real(o.price); });
    column([](const WebsiteOutcome& o) { return format_real(o.vip_price); });
    column([](const WebsiteOutcome& o) { return format_real(o.shares.vip); });
    column([](const WebsiteOutcome& o) { return format_real(o.shares.regular); });
    column([](const WebsiteOutcome& o) { return format_real(o.shares.non); });
    column([](const WebsiteOutcome& o) { return format_real(o.spaces); });
    column([](const WebsiteOutcome& o) { return format_real(o.membership_utility); });
    column([](const WebsiteOutcome& o) { return format_real(o.ad_utility); });
    column([](const WebsiteOutcome& o) { return format_real(o.total_utility); });
    column([](const WebsiteOutcome& o) { return format_real(o.watch_prob); });
    column([](const WebsiteOutcome& o) {
      return o.participates ? format_real(o.saturation_threshold) : std::string();
    });
    os << '\n';
  }
}

}  // namespace vwm
