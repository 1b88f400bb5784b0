// vwm: solve, sweep and verify membership-advertising market equilibria.
//
// Exit codes: 0 ok, 1 invalid config or arguments, 2 oracle failure, 3 I/O.

#include <omp.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vwm/config_io.hpp"
#include "vwm/equilibrium.hpp"
#include "vwm/market.hpp"
#include "vwm/oracle.hpp"
#include "vwm/sweep.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitOracle = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Builds the file in memory first so a failed run never leaves half a CSV.
template <typename Fn>
void write_file(const fs::path& path, Fn&& fill) {
  std::ostringstream buf;
  fill(buf);
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << buf.str();
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

vwm::MarketConfig load(const std::string& path, std::optional<std::uint64_t> seed) {
  if (!fs::exists(path)) throw IoError("no such file: " + path);
  vwm::MarketConfig cfg = vwm::load_config(path, seed);
  const vwm::ValidationReport report = vwm::validate(cfg);
  for (const auto& issue : report.issues)
    if (issue.kind == vwm::IssueKind::kNote)
      std::cerr << "note: " << issue.field << ": " << issue.message << '\n';
  vwm::require_valid(cfg);
  return cfg;
}

struct SweepRun {
  std::string config;
  vwm::SweepSpec spec;
};

vwm::SweepParam param_or_throw(const std::string& name) {
  auto p = vwm::parse_sweep_param(name);
  if (!p) throw std::invalid_argument("unknown sweep parameter '" + name + "'");
  return *p;
}

// {"runs": [{"config": ..., "param": ..., "range": ..., "out": ...}, ...]}
// Config paths are relative to the spec file, outputs to --out-dir.
std::vector<SweepRun> load_spec_file(const fs::path& path, const fs::path& out_dir) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw vwm::ConfigError("", path.string() + ": " + e.what());
  }
  if (!j.contains("runs") || !j["runs"].is_array())
    throw vwm::ConfigError("runs", path.string() + ": missing 'runs' array");
  std::vector<SweepRun> runs;
  for (const auto& r : j["runs"]) {
    for (const char* key : {"config", "param", "range", "out"})
      if (!r.contains(key) || !r[key].is_string())
        throw vwm::ConfigError(key, path.string() + ": run needs string '" + key + "'");
    SweepRun run;
    run.config = (path.parent_path() / r["config"].get<std::string>()).string();
    run.spec.parameter = param_or_throw(r["param"].get<std::string>());
    run.spec.values = vwm::parse_range(r["range"].get<std::string>());
    run.spec.output_path = (out_dir / r["out"].get<std::string>()).string();
    runs.push_back(std::move(run));
  }
  return runs;
}

int run_solve(const std::string& config, const std::string& out, bool csv,
              std::optional<std::uint64_t> seed) {
  const vwm::MarketConfig cfg = load(config, seed);
  const vwm::EquilibriumReport report = vwm::solve_equilibrium(cfg);
  if (csv)
    vwm::write_report_csv(std::cout, report);
  else
    vwm::write_report_summary(std::cout, report);
  if (!out.empty())
    write_file(out, [&](std::ostream& os) { vwm::write_report_csv(os, report); });
  return 0;
}

int run_sweep(std::vector<SweepRun> runs, std::optional<std::uint64_t> seed, int jobs) {
  for (const SweepRun& run : runs) {
    const vwm::MarketConfig cfg = load(run.config, seed);
    const vwm::SweepResult result = vwm::run_sweep(cfg, run.spec, jobs);
    write_file(run.spec.output_path,
               [&](std::ostream& os) { vwm::write_sweep_csv(os, result); });
    std::cout << "wrote " << result.rows.size() << " rows to " << run.spec.output_path
              << '\n';
  }
  return 0;
}

int run_verify(const std::string& config, std::uint64_t trials,
               std::optional<std::uint64_t> seed) {
  const vwm::MarketConfig cfg = load(config, seed);
  vwm::VerifyOptions opts;
  opts.user_trials = trials;
  opts.poisson_trials = trials;
  const auto reports = vwm::verify_equilibrium(cfg, opts);
  vwm::write_oracle_table(std::cout, reports);
  int failed = 0;
  for (const auto& r : reports) failed += r.pass ? 0 : 1;
  if (failed) {
    std::cerr << failed << " oracle check(s) failed:\n";
    for (const auto& r : reports)
      if (!r.pass) std::cerr << "  " << r.name << " rel_err=" << r.rel_err << '\n';
    return kExitOracle;
  }
  std::cout << "all " << reports.size() << " checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium solver for membership-advertising video-website markets"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed;
  int jobs = 0;
  app.add_option("--seed", seed, "Override rng_seed from the config");
  app.add_option("--jobs", jobs, "Worker threads (default: OpenMP default)")
      ->check(CLI::PositiveNumber);

  std::string config, out;
  bool csv = false;
  auto* solve = app.add_subcommand("solve", "Solve one config");
  solve->add_option("config", config, "Config JSON")->required();
  solve->add_option("--out", out, "Write the per-website CSV here");
  solve->add_flag("--csv", csv, "Print CSV instead of the summary");

  std::string param, range, spec_file, out_dir = ".";
  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter");
  sweep->add_option("config", config, "Base config JSON");
  sweep->add_option("--param", param,
                    "sigma_multiplier | gamma | ad_cost_uniform_max | ad_cost_common | xi");
  sweep->add_option("--range", range, "start:stop:step or v1,v2,...");
  sweep->add_option("--out", out, "Output CSV");
  sweep->add_option("--spec", spec_file, "JSON file listing several sweep runs");
  sweep->add_option("--out-dir", out_dir, "Output directory for --spec runs");

  std::uint64_t trials = 1'000'000;
  auto* verify = app.add_subcommand("verify", "Check closed forms against oracles");
  verify->add_option("config", config, "Config JSON")->required();
  verify->add_option("--trials", trials, "Monte Carlo trials per check")
      ->check(CLI::Range(std::uint64_t{100'000}, std::uint64_t{1'000'000'000}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (jobs > 0) omp_set_num_threads(jobs);
  const int sweep_jobs = jobs > 0 ? jobs : omp_get_max_threads();

  try {
    if (*solve) return run_solve(config, out, csv, seed);
    if (*verify) return run_verify(config, trials, seed);
    if (*sweep) {
      std::vector<SweepRun> runs;
      if (!spec_file.empty()) {
        if (!config.empty() || !param.empty())
          throw std::invalid_argument("--spec cannot be combined with a config or --param");
        if (!fs::exists(spec_file)) throw IoError("no such file: " + spec_file);
        runs = load_spec_file(spec_file, out_dir);
      } else {
        if (config.empty() || param.empty() || range.empty() || out.empty())
          throw std::invalid_argument("sweep needs <config> --param --range --out, or --spec");
        runs.push_back({config, {param_or_throw(param), vwm::parse_range(range), out}});
      }
      return run_sweep(std::move(runs), seed, sweep_jobs);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const vwm::ValidationError& e) {
    std::cerr << "invalid config:\n" << e.what() << '\n';
    return kExitInvalid;
  } catch (const vwm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
