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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "swipt/montecarlo.hpp"

namespace swipt {
namespace {

SystemConfig scalar_config() {
  SystemConfig cfg;
  cfg.su_antennas = 1;
  return cfg;
}

TEST(EmpiricalDistTest, EcdfAtSortedSamples) {
  const auto d = EmpiricalDist::from_samples({3.0, 1.0, 2.0, 5.0});
  ASSERT_EQ(d.size(), 4u);
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(d.ecdf(d.samples[i]), static_cast<double>(i + 1) / 4.0);
  }
}

TEST(EmpiricalDistTest, HistogramMassAndBinCap) {
  Rng rng(1);
  std::vector<double> xs(50000);
  for (auto& x : xs) x = sample_gamma(2.0, rng);
  const auto d = EmpiricalDist::from_samples(xs);
  EXPECT_NEAR(std::accumulate(d.bin_mass.begin(), d.bin_mass.end(), 0.0), 1.0, 1e-12);
  EXPECT_LE(d.bin_mass.size(), kMaxBins);
  EXPECT_EQ(d.bin_edges.size(), d.bin_mass.size() + 1);
  EXPECT_EQ(d.bin_edges.front(), d.samples.front());
  EXPECT_EQ(d.bin_edges.back(), d.samples.back());

  std::vector<double> heavy(100000);
  for (auto& x : heavy) x = std::exp(10.0 * rng.normal());
  EXPECT_EQ(EmpiricalDist::from_samples(heavy).bin_mass.size(), kMaxBins);
}

TEST(EmpiricalDistTest, DegenerateSamples) {
  const auto d = EmpiricalDist::from_samples({2.0, 2.0, 2.0});
  EXPECT_EQ(d.bin_mass.size(), 1u);
  EXPECT_EQ(d.bin_mass[0], 1.0);
}

TEST(RunScenarioTest, EmptyRun) {
  const auto run = run_scenario(scalar_config(), Scenario::kUplinkPerfect, 0);
  EXPECT_TRUE(run.dist.empty());
  EXPECT_THROW(ks_statistic(run.dist, ScalarLaw::gamma(1, 1)), std::invalid_argument);
  EXPECT_THROW(compare(run.dist, ScalarLaw::gamma(1, 1)), std::invalid_argument);
}

TEST(RunScenarioTest, DeterministicAndWorkerIndependent) {
  const auto cfg = scalar_config();
  for (auto s : {Scenario::kUplinkImperfect, Scenario::kDownlinkImperfect}) {
    const auto a = run_scenario(cfg, s, 500);
    const auto b = run_scenario(cfg, s, 500);
    RunOptions opt;
    opt.workers = 3;
    const auto c = run_scenario(cfg, s, 500, opt);
    EXPECT_EQ(a.dist.samples, b.dist.samples);
    EXPECT_EQ(a.dist.samples, c.dist.samples);
    EXPECT_EQ(a.mean_scale, c.mean_scale);
  }
}

TEST(RunScenarioTest, UplinkMeanGrowsWithReceiveAntennas) {
  auto cfg = scalar_config();
  double prev = 0.0;
  for (int nr : {4, 8}) {
    cfg.agg_rx_antennas = cfg.agg_tx_antennas = cfg.selected_antennas = nr;
    const double m = run_scenario(cfg, Scenario::kUplinkPerfect, 3000).dist.mean();
    EXPECT_GT(m, prev);
    prev = m;
  }
}

TEST(RunScenarioTest, InfeasibleUplinkIsRejected) {
  SystemConfig cfg;
  cfg.agg_rx_antennas = cfg.agg_tx_antennas = cfg.selected_antennas = 4;
  EXPECT_THROW(run_scenario(cfg, Scenario::kUplinkPerfect, 10), std::domain_error);
}

TEST(RunScenarioTest, TraceReduction) {
  SystemConfig cfg;
  RunOptions opt;
  opt.reduction = Reduction::kTrace;
  const auto t = run_scenario(cfg, Scenario::kUplinkPerfect, 200, opt);
  const auto f = run_scenario(cfg, Scenario::kUplinkPerfect, 200);
  EXPECT_GT(t.dist.mean(), f.dist.mean());
  const auto report = score_run(cfg, Scenario::kUplinkPerfect, t, Reduction::kTrace);
  EXPECT_EQ(report.ks_mode, "two_sample_trace");
}

TEST(AnalyticalLawTest, UplinkPassThrough) {
  SystemConfig cfg = scalar_config();
  cfg.users = 1;
  cfg.si_gain = 0.0;
  const auto law = analytical_scalar_law(cfg, Scenario::kUplinkPerfect);
  EXPECT_EQ(law.law, ScalarLaw::gamma(8.0, 1.0));
  ASSERT_TRUE(law.wishart.has_value());
  EXPECT_EQ(law.wishart->dof, 16.0);
}

TEST(AnalyticalLawTest, AlphaZeroUplinkLawsIdentical) {
  SystemConfig cfg = scalar_config();
  cfg.csi_error = 0.0;
  EXPECT_EQ(analytical_scalar_law(cfg, Scenario::kUplinkPerfect).law,
            analytical_scalar_law(cfg, Scenario::kUplinkImperfect).law);
}

TEST(AnalyticalLawTest, DownlinkFlags) {
  const auto cfg = scalar_config();
  const auto p = analytical_scalar_law(cfg, Scenario::kDownlinkPerfect);
  EXPECT_EQ(p.law.kind, ScalarLaw::Kind::kBetaPrime);
  EXPECT_TRUE(p.flags.empty());
  const auto q = analytical_scalar_law(cfg, Scenario::kDownlinkImperfect);
  ASSERT_FALSE(q.flags.empty());
  EXPECT_EQ(q.flags[0].rfind("ng_vs_ns_factor2", 0), 0u);
}

TEST(KsTest, SelfConsistency) {
  for (const auto& law : {ScalarLaw::gamma(5.0, 0.8), ScalarLaw::beta_prime(8.2, 22.9)}) {
    Rng rng(2);
    std::vector<double> xs(100000);
    for (auto& x : xs) x = sample_scalar(law, rng);
    EXPECT_LE(ks_statistic(EmpiricalDist::from_samples(xs), law), 0.02);
  }
}

TEST(KsTest, DegenerateAtZero) {
  const auto d = EmpiricalDist::from_samples(std::vector<double>(100, 0.0));
  EXPECT_EQ(ks_statistic(d, ScalarLaw::gamma(2.0, 1.0)), 1.0);
}

TEST(KsTest, TwoSample) {
  Rng rng(3);
  std::vector<double> xs(5000);
  for (auto& x : xs) x = rng.uniform();
  const auto a = EmpiricalDist::from_samples(xs);
  EXPECT_EQ(ks_two_sample(a, a), 0.0);
  std::vector<double> shifted = xs;
  for (auto& x : shifted) x += 2.0;
  EXPECT_EQ(ks_two_sample(a, EmpiricalDist::from_samples(shifted)), 1.0);
}

TEST(CompareTest, SelfSampledMetrics) {
  const auto law = ScalarLaw::gamma(4.0, 0.5);
  Rng rng(4);
  std::vector<double> xs(100000);
  for (auto& x : xs) x = sample_scalar(law, rng);
  const auto r = compare(EmpiricalDist::from_samples(xs), law);
  EXPECT_LE(r.ks_distance, 0.02);
  EXPECT_LT(*r.mean_rel_err, 0.02);
  EXPECT_LT(*r.var_rel_err, 0.05);
  EXPECT_TRUE(r.validity_flags.empty());
}

TEST(CompareTest, UndefinedMomentsAndLowSample) {
  const auto r = compare(EmpiricalDist::from_samples({0.5, 1.0, 2.0}),
                         ScalarLaw::beta_prime(2.0, 0.8));
  EXPECT_TRUE(r.has_flag("mean_undefined"));
  EXPECT_TRUE(r.has_flag("variance_undefined"));
  EXPECT_TRUE(r.has_flag("low_sample"));
  EXPECT_FALSE(r.mean_rel_err.has_value());
}

TEST(CompareTest, JsonRoundTrip) {
  const auto cfg = scalar_config();
  const auto run = run_scenario(cfg, Scenario::kDownlinkImperfect, 300);
  const auto r = score_run(cfg, Scenario::kDownlinkImperfect, run);
  const auto text = report_to_json(r).dump();
  EXPECT_EQ(report_from_json(nlohmann::json::parse(text)), r);
}

TEST(ScenarioNamesTest, ParseBothSpellings) {
  EXPECT_EQ(parse_scenario("uplink-perfect"), Scenario::kUplinkPerfect);
  EXPECT_EQ(parse_scenario("downlink_imperfect"), Scenario::kDownlinkImperfect);
  EXPECT_FALSE(parse_scenario("sideways").has_value());
}

}  // namespace
}  // namespace swipt
