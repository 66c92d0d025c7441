// Copyright 2026 The swipt_sinr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "formats.hpp"
#include "swipt/downlink.hpp"
#include "swipt/errors.hpp"
#include "swipt/rng.hpp"
#include "swipt/version.hpp"

namespace swipt::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::string reduction_name(Reduction r) {
  return r == Reduction::kTrace ? "trace" : "first_stream";
}

Json law_parameters(const SystemConfig& cfg, Scenario scenario,
                    const ScenarioRun& run) {
  Json doc = Json::object();
  if (is_uplink(scenario)) {
    const auto law = analytical_scalar_law(cfg, scenario, run.mean_scale);
    doc["wishart"] = {{"dim", law.wishart->dim},
                      {"dof", law.wishart->dof},
                      {"scale", law.wishart->scale(0, 0).real()}};
    doc["mean_scale"] = run.mean_scale;
    doc["dof_full_array"] = 2.0 * cfg.agg_rx_antennas;
    return doc;
  }
  if (scenario == Scenario::kDownlinkPerfect) {
    const auto m = moment_match_perfect(cfg);
    doc["moment_match"] = {{"eta_s", m.eta_s}, {"N_s", m.n_s}, {"eta_v", m.eta_v},
                           {"N_v", m.n_v}, {"sigma_d0", m.sigma_d0}};
  } else {
    const auto m = moment_match_imperfect(cfg);
    doc["moment_match"] = {{"eta_g", m.eta_g}, {"N_g", m.n_g}, {"eta_q", m.eta_q},
                           {"N_q", m.n_q},     {"eta_v", m.eta_v}, {"N_v", m.n_v},
                           {"sigma_d0_hat", m.sigma_d0_hat}};
  }
  const auto b = scenario == Scenario::kDownlinkPerfect ? beta2_params_perfect(cfg)
                                                        : beta2_params_imperfect(cfg);
  doc["beta2"] = {{"N1", b.n1}, {"N2", b.n2}, {"dim", b.dim},
                  {"normalizable", b.normalizable()}};
  return doc;
}

// Config load + overrides + validation; throws ConfigError.
SystemConfig load_effective(const RunRequest& req) {
  SystemConfig cfg = load_config(req.config_path);
  if (req.samples) cfg.mc_samples = *req.samples;
  if (req.seed) cfg.seed = *req.seed;
  return cfg;
}

ComparisonReport run_into(const SystemConfig& cfg, const RunRequest& req,
                          const fs::path& dir, std::ostream& out) {
  require_valid(cfg);
  const std::string started = utc_timestamp();
  RunOptions opt;
  opt.workers = req.workers;
  opt.reduction = req.reduction;
  const ScenarioRun run = run_scenario(cfg, req.scenario, cfg.mc_samples, opt);
  if (run.dist.empty()) {
    throw std::runtime_error("no samples: n must be >= 1");
  }
  const ComparisonReport report = score_run(cfg, req.scenario, run, req.reduction);

  fs::create_directories(dir);
  write_csv(dir / "histogram.csv", histogram_table(run.dist));
  write_csv(dir / "pdf_curve.csv", pdf_curve_table(run.dist, report.law));

  Json rep = report_to_json(report);
  rep["reduction"] = reduction_name(req.reduction);
  rep["parameters"] = law_parameters(cfg, req.scenario, run);
  rep["resamples"] = run.resamples;
  write_json(dir / "report.json", rep);

  const Json manifest = {
      {"config", config_to_json(cfg)},
      {"scenario", to_string(req.scenario)},
      {"seed", cfg.seed},
      {"n_samples", cfg.mc_samples},
      {"reduction", reduction_name(req.reduction)},
      {"workers", req.workers},
      {"version", version()},
      {"rng", std::string(Rng::kAlgorithm)},
      {"started_utc", started},
      {"finished_utc", utc_timestamp()},
  };
  write_json(dir / "manifest.json", manifest);

  out << to_string(req.scenario) << ": n=" << report.n_samples
      << " ks=" << format_number(report.ks_distance)
      << " mean=" << format_number(report.empirical_mean) << '\n';
  for (const auto& f : report.validity_flags) out << "  note: " << f << '\n';
  return report;
}

}  // namespace

std::optional<SweepAxis> parse_axis(const std::string& name) {
  if (name == "N_r") return SweepAxis::kRxAntennas;
  if (name == "alpha") return SweepAxis::kAlpha;
  if (name == "rho") return SweepAxis::kRho;
  if (name == "K") return SweepAxis::kUsers;
  return std::nullopt;
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kRxAntennas: return "N_r";
    case SweepAxis::kAlpha: return "alpha";
    case SweepAxis::kRho: return "rho";
    case SweepAxis::kUsers: return "K";
  }
  return "unknown";
}

SystemConfig apply_axis(SystemConfig cfg, SweepAxis axis, double value) {
  auto as_int = [&] {
    if (value != std::floor(value) || std::abs(value) > 1e6) {
      throw std::invalid_argument(to_string(axis) + " needs an integer value, got " +
                                  format_number(value));
    }
    return static_cast<int>(value);
  };
  switch (axis) {
    case SweepAxis::kRxAntennas: {
      const int n = as_int();
      const bool all_selected = cfg.selected_antennas == cfg.agg_rx_antennas;
      cfg.agg_rx_antennas = n;
      cfg.agg_tx_antennas = n;
      if (all_selected || cfg.selected_antennas > n) cfg.selected_antennas = n;
      break;
    }
    case SweepAxis::kAlpha: cfg.csi_error = value; break;
    case SweepAxis::kRho: cfg.ps_ratio = value; break;
    case SweepAxis::kUsers: cfg.users = as_int(); break;
  }
  return cfg;
}

unsigned workers_from_env() {
  const char* env = std::getenv("SWIPT_SINR_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long w = std::strtoul(env, &end, 10);
  if (*end != '\0' || w == 0 || w > 1024) return 1;
  return static_cast<unsigned>(w);
}

int cmd_validate(const fs::path& config_path, std::ostream& out, std::ostream& err) {
  SystemConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  const auto violations = validate_config(cfg);
  for (const auto& v : violations) out << v.key << ": " << v.message << '\n';
  if (!violations.empty()) return kExitValidation;
  out << config_path.string() << ": valid\n";
  return kExitOk;
}

int cmd_run(const RunRequest& req, std::ostream& out, std::ostream& err) {
  SystemConfig cfg;
  try {
    cfg = load_effective(req);
    require_valid(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  try {
    run_into(cfg, req, req.out_dir, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_sweep(const SweepRequest& req, std::ostream& out, std::ostream& err) {
  if (req.values.empty()) {
    err << "error: --values is empty\n";
    return kExitValidation;
  }
  SystemConfig base;
  try {
    base = load_effective(req.base);
    require_valid(base);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  CsvTable summary{{"value", "ks", "mean", "var", "analytical_mean", "ok"}, {}};
  constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
  bool failed = false;
  std::vector<std::string> failures;
  for (double value : req.values) {
    const fs::path dir = req.base.out_dir / (to_string(req.axis) + "_" + format_number(value));
    try {
      const SystemConfig cfg = apply_axis(base, req.axis, value);
      const auto rep = run_into(cfg, req.base, dir, out);
      summary.rows.push_back({value, rep.ks_distance, rep.empirical_mean,
                              rep.empirical_variance, rep.analytical_mean.value_or(kNan),
                              1.0});
    } catch (const std::exception& e) {
      failed = true;
      err << "error: " << to_string(req.axis) << "=" << format_number(value) << ": "
          << e.what() << '\n';
      failures.push_back(to_string(req.axis) + "=" + format_number(value) + ": " + e.what());
      summary.rows.push_back({value, kNan, kNan, kNan, kNan, 0.0});
    }
  }
  try {
    fs::create_directories(req.base.out_dir);
    write_csv(req.base.out_dir / "summary.csv", summary);
    if (!failures.empty()) {
      write_json(req.base.out_dir / "failures.json", Json(failures));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return failed ? kExitRuntime : kExitOk;
}

}  // namespace swipt::cli
