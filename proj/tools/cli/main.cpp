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

#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "swipt/version.hpp"

namespace {

using swipt::cli::kExitValidation;

struct Common {
  std::string config;
  std::string scenario = "uplink-perfect";
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string out;
  unsigned workers = 0;
  std::string reduction = "first-stream";
};

void add_run_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "JSON config file")->required();
  cmd->add_option("--scenario", c.scenario, "Scenario")
      ->check(CLI::IsMember({"uplink-perfect", "uplink-imperfect", "downlink-perfect",
                             "downlink-imperfect"}));
  cmd->add_option("--samples", c.samples, "Monte-Carlo realizations (overrides mc_samples)");
  cmd->add_option("--seed", c.seed, "Seed (overrides config seed)");
  cmd->add_option("--out", c.out, "Output directory")->required();
  cmd->add_option("--workers", c.workers,
                  "Worker threads (default: SWIPT_SINR_WORKERS or 1)");
  cmd->add_option("--reduction", c.reduction, "SINR matrix reduction")
      ->check(CLI::IsMember({"first-stream", "trace"}));
}

swipt::cli::RunRequest to_request(const CLI::App* cmd, const Common& c) {
  swipt::cli::RunRequest req;
  req.config_path = c.config;
  req.scenario = *swipt::parse_scenario(c.scenario);
  if (cmd->count("--samples") > 0) req.samples = c.samples;
  if (cmd->count("--seed") > 0) req.seed = c.seed;
  req.out_dir = c.out;
  req.workers = cmd->count("--workers") > 0 && c.workers > 0
                    ? c.workers
                    : swipt::cli::workers_from_env();
  req.reduction = c.reduction == "trace" ? swipt::Reduction::kTrace
                                         : swipt::Reduction::kFirstStream;
  return req;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte-Carlo and closed-form SINR laws of a full-duplex SWIPT MU-MIMO link",
               "swipt_sinr"};
  app.set_version_flag("--version", std::string(swipt::version()));
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a config file");
  validate->add_option("--config", validate_path, "JSON config file")->required();

  Common run_opts;
  auto* run = app.add_subcommand("run", "Run one scenario and score it");
  add_run_flags(run, run_opts);

  Common sweep_opts;
  std::string axis;
  std::vector<std::string> values;
  auto* sweep = app.add_subcommand("sweep", "Run a scenario over one parameter axis");
  add_run_flags(sweep, sweep_opts);
  sweep->add_option("--axis", axis, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"N_r", "alpha", "rho", "K"}));
  sweep->add_option("--values", values, "Comma-separated values")
      ->delimiter(',')
      ->expected(0, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  if (*validate) return swipt::cli::cmd_validate(validate_path, std::cout, std::cerr);
  if (*run) return swipt::cli::cmd_run(to_request(run, run_opts), std::cout, std::cerr);

  swipt::cli::SweepRequest req;
  req.base = to_request(sweep, sweep_opts);
  req.axis = *swipt::cli::parse_axis(axis);
  for (const auto& v : values) {
    if (v.empty()) continue;
    try {
      std::size_t used = 0;
      req.values.push_back(std::stod(v, &used));
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      std::cerr << "error: --values: '" << v << "' is not a number\n";
      return kExitValidation;
    }
  }
  return swipt::cli::cmd_sweep(req, std::cout, std::cerr);
}
