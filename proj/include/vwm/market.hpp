#ifndef VWM_MARKET_HPP_
#define VWM_MARKET_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace vwm {

// One video website. Qualities are in the same units as the preference
// factor's reciprocal, so theta * Q is a payoff.
struct WebsiteParams {
  double q_vip = 0.0;
  double q_regular = 0.0;
  double q_non = 0.0;
  double sigma = 0.0;    // VIP price = sigma * regular price
  double ad_cost = 0.0;  // maintenance cost per unit AD space
  double reward = 0.0;   // advertiser reward coefficient

  bool operator==(const WebsiteParams&) const = default;
};

struct MarketConfig {
  int website_count = 0;
  std::int64_t user_count = 0;
  int ad_count = 0;
  double visit_rate = 0.0;
  double zipf_exponent = 0.0;
  double theta_max = 0.0;
  std::uint64_t rng_seed = 0;
  std::vector<WebsiteParams> websites;

  bool operator==(const MarketConfig&) const = default;
};

// Zipf popularity of websites ranked 1..K; phi[k-1] is website k.
struct Popularity {
  std::vector<double> phi;
};

// Price coefficient at which all three indifference thresholds coincide.
double sigma_threshold(const WebsiteParams& w);

Popularity zipf_popularity(int website_count, double exponent);

enum class IssueKind {
  kViolation,  // config is unusable
  kNote,       // usable, but worth reporting
};

struct ValidationIssue {
  IssueKind kind;
  std::string field;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool valid() const;
  std::vector<ValidationIssue> violations() const;
  std::string to_string() const;
};

// Never throws; downstream solvers call require_valid().
ValidationReport validate(const MarketConfig& config);

class ValidationError : public std::exception {
 public:
  explicit ValidationError(ValidationReport report);
  const char* what() const noexcept override { return message_.c_str(); }
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
  std::string message_;
};

void require_valid(const MarketConfig& config);

}  // namespace vwm

#endif  // VWM_MARKET_HPP_
