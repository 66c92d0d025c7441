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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "swipt/config.hpp"
#include "swipt/distributions.hpp"
#include "swipt/uplink.hpp"

namespace swipt {

enum class Scenario {
  kUplinkPerfect,
  kUplinkImperfect,
  kDownlinkPerfect,
  kDownlinkImperfect,
};

// "uplink_perfect" style identifiers; parse_scenario also accepts hyphens.
std::string to_string(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);
bool is_uplink(Scenario s);

// How a realization's SINR matrix becomes one sample.
enum class Reduction { kFirstStream, kTrace };

// Sorted samples with a Freedman-Diaconis histogram (at most 512 bins).
struct EmpiricalDist {
  std::vector<double> samples;
  std::vector<double> bin_edges;
  std::vector<double> bin_mass;

  static EmpiricalDist from_samples(std::vector<double> samples);

  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
  double mean() const;
  // Unbiased sample variance.
  double variance() const;
  // Linear-interpolated quantile, q in [0, 1].
  double quantile(double q) const;
  double ecdf(double x) const;
};

inline constexpr std::size_t kMaxBins = 512;
inline constexpr int kMaxResamples = 16;

struct RunOptions {
  Reduction reduction = Reduction::kFirstStream;
  unsigned workers = 1;
  int user = 0;
};

struct ScenarioRun {
  EmpiricalDist dist;
  // Realization average of the uplink SINR scale; 0 for the downlink.
  double mean_scale = 0.0;
  std::uint64_t resamples = 0;
};

// Realization j draws its channels from Rng(cfg.seed, j), drawing again on
// a rank-deficient or singular realization up to kMaxResamples times.
// The result does not depend on options.workers. Throws std::runtime_error
// naming the realization when resampling is exhausted.
ScenarioRun run_scenario(const SystemConfig& cfg, Scenario scenario,
                         std::uint64_t n, const RunOptions& options = {});

struct AnalyticalLaw {
  ScalarLaw law;
  std::optional<WishartParams> wishart;  // uplink
  std::optional<BetaIIParams> beta2;     // downlink
  std::vector<std::string> flags;
};

// Uplink: Gamma(dof / 2, scale) with the scale averaged over the run when
// mean_scale is given, else the expected scale of unit-norm beams.
// Downlink: beta-prime(N1, N2); exact scalar reduction only for N_u = 1.
AnalyticalLaw analytical_scalar_law(const SystemConfig& cfg, Scenario scenario,
                                    std::optional<double> mean_scale = std::nullopt,
                                    UplinkDof dof = UplinkDof::kProjectionRank);

// n draws of the reduced analytical matrix law, stream `stream` of the seed.
std::vector<double> sample_analytical(const AnalyticalLaw& law, std::uint64_t n,
                                      Reduction reduction, std::uint64_t seed,
                                      std::uint64_t stream = 0);

// Two-sided sup |ECDF - F|. Throws std::invalid_argument on empty input.
double ks_statistic(const EmpiricalDist& emp, const ScalarLaw& law);
double ks_two_sample(const EmpiricalDist& a, const EmpiricalDist& b);

struct ComparisonReport {
  Scenario scenario = Scenario::kUplinkPerfect;
  ScalarLaw law;
  std::string ks_mode = "one_sample";
  double ks_distance = 1.0;
  std::uint64_t n_samples = 0;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;
  std::optional<double> analytical_mean;
  std::optional<double> analytical_variance;
  std::optional<double> mean_rel_err;
  std::optional<double> var_rel_err;
  std::vector<std::string> validity_flags;

  bool has_flag(std::string_view code) const;
  bool operator==(const ComparisonReport&) const = default;
};

inline constexpr std::uint64_t kLowSampleThreshold = 1000;

ComparisonReport compare(const EmpiricalDist& emp, const ScalarLaw& law,
                         Scenario scenario = Scenario::kUplinkPerfect,
                         std::vector<std::string> flags = {});

// Full scoring of a run: law, flags, one-sample KS in first-stream mode and
// two-sample KS against sampled matrix laws in trace mode.
ComparisonReport score_run(const SystemConfig& cfg, Scenario scenario,
                           const ScenarioRun& run,
                           Reduction reduction = Reduction::kFirstStream,
                           UplinkDof dof = UplinkDof::kProjectionRank);

nlohmann::json report_to_json(const ComparisonReport& report);
ComparisonReport report_from_json(const nlohmann::json& doc);

}  // namespace swipt
