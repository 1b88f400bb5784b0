#include "vwm/config_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vwm/rng.hpp"

namespace vwm {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ConfigError(path + key, "missing required field '" + path + key + "'");
  return *it;
}

double get_real(const json& obj, const std::string& key,
                const std::string& path = "") {
  const json& v = require(obj, key, path);
  if (!v.is_number())
    throw ConfigError(path + key, "field '" + path + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x))
    throw ConfigError(path + key, "field '" + path + key + "' must be finite");
  return x;
}

std::int64_t get_int(const json& obj, const std::string& key) {
  const json& v = require(obj, key, "");
  if (!v.is_number_integer())
    throw ConfigError(key, "field '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::pair<int, int> line_and_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

double parse_number(const std::string& s, const std::string& field) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(x))
    throw ConfigError(field, "bad number '" + s + "' in " + field);
  return x;
}

}  // namespace

std::vector<double> uniform_costs(int website_count, double lo, double hi,
                                  std::uint64_t seed) {
  std::vector<double> c(static_cast<std::size_t>(website_count));
  for (int k = 1; k <= website_count; ++k) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(k));
    c[k - 1] = lo + (hi - lo) * rng.uniform();
  }
  return c;
}

std::vector<double> expand_cost_rule(const std::string& rule, int website_count,
                                     std::uint64_t seed) {
  const std::string field = "websites.cost_rule";
  std::vector<double> c(static_cast<std::size_t>(website_count));
  if (rule == "identity") {
    for (int k = 1; k <= website_count; ++k) c[k - 1] = k;
  } else if (rule == "reverse") {
    for (int k = 1; k <= website_count; ++k) c[k - 1] = website_count - k + 1;
  } else if (rule.rfind("constant:", 0) == 0) {
    const double v = parse_number(rule.substr(9), field);
    for (double& x : c) x = v;
  } else if (rule.rfind("uniform:", 0) == 0) {
    const std::string args = rule.substr(8);
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw ConfigError(field, "uniform cost rule needs 'uniform:a,b'");
    const double lo = parse_number(args.substr(0, comma), field);
    const double hi = parse_number(args.substr(comma + 1), field);
    if (!(lo > 0.0 && hi >= lo))
      throw ConfigError(field, "uniform cost rule needs 0 < a <= b");
    c = uniform_costs(website_count, lo, hi, seed);
  } else {
    throw ConfigError(field, "unknown cost rule '" + rule + "'");
  }
  return c;
}

MarketConfig parse_config(const std::string& text,
                          std::optional<std::uint64_t> seed_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_and_column(text, e.byte);
    throw ConfigError("", "parse error at line " + std::to_string(line) +
                              ", column " + std::to_string(col) + ": " +
                              e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "config root must be an object");

  MarketConfig cfg;
  const std::int64_t k = get_int(doc, "K");
  if (k < 1 || k > 1'000'000) throw ConfigError("K", "field 'K' out of range");
  cfg.website_count = static_cast<int>(k);
  cfg.user_count = get_int(doc, "N");
  const std::int64_t g = get_int(doc, "G");
  if (g < 1 || g > 1'000'000'000) throw ConfigError("G", "field 'G' out of range");
  cfg.ad_count = static_cast<int>(g);
  cfg.visit_rate = get_real(doc, "xi");
  cfg.zipf_exponent = get_real(doc, "gamma");
  cfg.theta_max = get_real(doc, "theta_max");
  const json& seed = require(doc, "rng_seed", "");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
    throw ConfigError("rng_seed", "field 'rng_seed' must be an unsigned integer");
  cfg.rng_seed = seed_override ? *seed_override : seed.get<std::uint64_t>();

  const json& sites = require(doc, "websites", "");
  if (sites.is_array()) {
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const json& s = sites[i];
      const std::string path = "websites[" + std::to_string(i + 1) + "].";
      if (!s.is_object()) throw ConfigError(path, path + " must be an object");
      WebsiteParams w;
      w.q_vip = get_real(s, "q_vip", path);
      w.q_regular = get_real(s, "q_regular", path);
      w.q_non = get_real(s, "q_non", path);
      w.sigma = get_real(s, "sigma", path);
      w.ad_cost = get_real(s, "ad_cost", path);
      w.reward = get_real(s, "reward", path);
      cfg.websites.push_back(w);
    }
  } else if (sites.is_object()) {
    const std::string path = "websites.";
    WebsiteParams w;
    w.q_vip = get_real(sites, "q_vip", path);
    w.q_regular = get_real(sites, "q_regular", path);
    w.q_non = get_real(sites, "q_non", path);
    w.reward = get_real(sites, "reward", path);
    const double mult = get_real(sites, "sigma_multiplier", path);
    const json& rule = require(sites, "cost_rule", path);
    if (!rule.is_string())
      throw ConfigError("websites.cost_rule", "field 'websites.cost_rule' must be a string");
    if (!(w.q_regular > w.q_non))
      throw ConfigError("websites.q_regular",
                        "shorthand needs q_regular > q_non to derive sigma");
    w.sigma = mult * sigma_threshold(w);
    const auto costs =
        expand_cost_rule(rule.get<std::string>(), cfg.website_count, cfg.rng_seed);
    for (double c : costs) {
      w.ad_cost = c;
      cfg.websites.push_back(w);
    }
  } else {
    throw ConfigError("websites", "field 'websites' must be an array or object");
  }
  return cfg;
}

MarketConfig load_config(const std::string& path,
                         std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str(), seed_override);
  } catch (const ConfigError& e) {
    throw ConfigError(e.field(), path + ": " + e.what());
  }
}

std::string serialize_config(const MarketConfig& c) {
  json doc;
  doc["K"] = c.website_count;
  doc["N"] = c.user_count;
  doc["G"] = c.ad_count;
  doc["xi"] = c.visit_rate;
  doc["gamma"] = c.zipf_exponent;
  doc["theta_max"] = c.theta_max;
  doc["rng_seed"] = c.rng_seed;
  json sites = json::array();
  for (const auto& w : c.websites) {
    sites.push_back({{"q_vip", w.q_vip},
                     {"q_regular", w.q_regular},
                     {"q_non", w.q_non},
                     {"sigma", w.sigma},
                     {"ad_cost", w.ad_cost},
                     {"reward", w.reward}});
  }
  doc["websites"] = std::move(sites);
  return doc.dump(2) + "\n";
}

}  // namespace vwm
