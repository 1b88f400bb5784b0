#ifndef VWM_SWEEP_HPP_
#define VWM_SWEEP_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vwm/equilibrium.hpp"
#include "vwm/market.hpp"

namespace vwm {

enum class SweepParam {
  kSigmaMultiplier,   // sigma_k = m * sigma_k^T for every website
  kGamma,             // Zipf exponent
  kAdCostUniformMax,  // C_k ~ U[1, C_max] from rng_seed
  kAdCostCommon,      // C_k = c for every website
  kXi,                // visit rate
};

const char* to_string(SweepParam p);
std::optional<SweepParam> parse_sweep_param(const std::string& name);

struct SweepSpec {
  SweepParam parameter = SweepParam::kXi;
  std::vector<double> values;
  std::string output_path;
};

// "a:b:step" (inclusive of b up to rounding) or an explicit "v1,v2,...".
// Throws std::invalid_argument on malformed input, step <= 0 or a > b.
std::vector<double> parse_range(const std::string& text);

// Number of seeds averaged for the participating-subset size in the
// uniform-cost sweep.
inline constexpr int kSubsetSeeds = 100;

MarketConfig apply_sweep_value(const MarketConfig& base, SweepParam p, double value);

struct SweepRow {
  double value = 0.0;
  EquilibriumReport report;
  double mean_subset_size = 0.0;  // kAdCostUniformMax only
};

struct SweepResult {
  SweepParam parameter;
  std::vector<SweepRow> rows;  // in sweep order
};

// Solves every sweep point, `jobs` at a time (<= 0: OpenMP default). Row
// order is always the order of spec.values.
SweepResult run_sweep(const MarketConfig& base, const SweepSpec& spec, int jobs = 0);

void write_sweep_csv(std::ostream& os, const SweepResult& result);

}  // namespace vwm

#endif  // VWM_SWEEP_HPP_
