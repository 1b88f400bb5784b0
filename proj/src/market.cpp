#include "vwm/market.hpp"

#include <cmath>
#include <sstream>

namespace vwm {

double sigma_threshold(const WebsiteParams& w) {
  return (w.q_vip - w.q_non) / (w.q_regular - w.q_non);
}

Popularity zipf_popularity(int website_count, double exponent) {
  Popularity out;
  out.phi.resize(static_cast<std::size_t>(website_count));
  double norm = 0.0;
  for (int k = 1; k <= website_count; ++k) {
    out.phi[k - 1] = 1.0 / std::pow(static_cast<double>(k), exponent);
    norm += out.phi[k - 1];
  }
  for (double& p : out.phi) p /= norm;
  return out;
}

bool ValidationReport::valid() const {
  for (const auto& issue : issues)
    if (issue.kind == IssueKind::kViolation) return false;
  return true;
}

std::vector<ValidationIssue> ValidationReport::violations() const {
  std::vector<ValidationIssue> out;
  for (const auto& issue : issues)
    if (issue.kind == IssueKind::kViolation) out.push_back(issue);
  return out;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& issue : issues) {
    os << (issue.kind == IssueKind::kViolation ? "violation" : "note") << " ["
       << issue.field << "]: " << issue.message << '\n';
  }
  return os.str();
}

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

ValidationReport validate(const MarketConfig& c) {
  ValidationReport r;
  auto violation = [&](std::string field, std::string msg) {
    r.issues.push_back({IssueKind::kViolation, std::move(field), std::move(msg)});
  };

  if (c.website_count < 2)
    violation("K", "at least two websites are required");
  if (c.user_count < 1) violation("N", "user count must be >= 1");
  if (c.ad_count < 1) violation("G", "ad count must be >= 1");
  if (!positive_finite(c.visit_rate)) violation("xi", "visit rate must be > 0");
  if (!positive_finite(c.zipf_exponent))
    violation("gamma", "Zipf exponent must be > 0");
  if (!positive_finite(c.theta_max))
    violation("theta_max", "preference support must be > 0");
  if (static_cast<int>(c.websites.size()) != c.website_count) {
    violation("websites", "expected " + std::to_string(c.website_count) +
                              " websites, got " +
                              std::to_string(c.websites.size()));
  }

  for (std::size_t i = 0; i < c.websites.size(); ++i) {
    const WebsiteParams& w = c.websites[i];
    const std::string prefix = "websites[" + std::to_string(i + 1) + "].";
    if (!(w.q_vip > w.q_regular && w.q_regular > w.q_non && w.q_non > 0.0) ||
        !std::isfinite(w.q_vip)) {
      violation(prefix + "quality",
                "quality ordering q_vip > q_regular > q_non > 0 violated");
      continue;
    }
    if (!(std::isfinite(w.sigma) && w.sigma > 1.0))
      violation(prefix + "sigma", "price coefficient must be > 1");
    if (!positive_finite(w.ad_cost))
      violation(prefix + "ad_cost", "AD-space cost must be > 0");
    if (!positive_finite(w.reward))
      violation(prefix + "reward", "reward coefficient must be > 0");

    const double st = sigma_threshold(w);
    if (std::abs(w.sigma - st) <= 1e-12 * st) {
      r.issues.push_back({IssueKind::kNote, prefix + "sigma",
                          "sigma equals threshold: Regular-Member region empty"});
    } else if (w.sigma > 1.0 && w.sigma < st) {
      violation(prefix + "sigma",
                "sigma below threshold " + std::to_string(st) +
                    ": unsupported for membership pricing");
    }
  }
  return r;
}

ValidationError::ValidationError(ValidationReport report)
    : report_(std::move(report)),
      message_("invalid market config:\n" + report_.to_string()) {}

void require_valid(const MarketConfig& config) {
  ValidationReport r = validate(config);
  if (!r.valid()) throw ValidationError(std::move(r));
}

}  // namespace vwm
