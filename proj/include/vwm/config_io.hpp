#ifndef VWM_CONFIG_IO_HPP_
#define VWM_CONFIG_IO_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vwm/market.hpp"

namespace vwm {

// Raised for unreadable files, malformed JSON and schema violations. The
// message names the file position or the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Parses the JSON config text and expands website shorthand (sigma
// multiplier, cost rules) into explicit per-website values. A seed override
// replaces rng_seed before any random cost rule is expanded.
MarketConfig parse_config(const std::string& json_text,
                          std::optional<std::uint64_t> seed_override = {});

MarketConfig load_config(const std::string& path,
                         std::optional<std::uint64_t> seed_override = {});

// Always writes the explicit per-website array form.
std::string serialize_config(const MarketConfig& config);

// Cost vector for K websites from a cost rule string:
//   "identity"      C_k = k
//   "reverse"       C_k = K - k + 1
//   "constant:c"    C_k = c
//   "uniform:a,b"   C_k = a + (b - a) u_k, u_k from stream (seed, k)
std::vector<double> expand_cost_rule(const std::string& rule, int website_count,
                                     std::uint64_t seed);

std::vector<double> uniform_costs(int website_count, double lo, double hi,
                                  std::uint64_t seed);

}  // namespace vwm

#endif  // VWM_CONFIG_IO_HPP_
