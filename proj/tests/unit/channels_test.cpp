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

#include "swipt/channels.hpp"
#include "swipt/errors.hpp"

namespace swipt {
namespace {

TEST(SampleChannelsTest, ShapesFollowConfig) {
  SystemConfig cfg;
  Rng rng(1);
  const ChannelSet ch = sample_channels(cfg, rng);
  ASSERT_EQ(ch.uplink_estimate.size(), 3u);
  EXPECT_EQ(ch.uplink_estimate[0].rows(), 8u);
  EXPECT_EQ(ch.uplink_estimate[0].cols(), 2u);
  EXPECT_EQ(ch.downlink_estimate[2].rows(), 2u);
  EXPECT_EQ(ch.downlink_estimate[2].cols(), 8u);
  EXPECT_EQ(ch.agg_self_interference.rows(), 8u);
  EXPECT_EQ(ch.su_self_interference.rows(), 3u);
  EXPECT_EQ(ch.su_self_interference.cols(), 2u);
  EXPECT_EQ(ch.downlink_beam[1].rows(), 8u);
  EXPECT_EQ(ch.downlink_beam[1].cols(), 2u);
  EXPECT_EQ(ch.uplink_selection[0].rows(), 8u);
}

TEST(SampleChannelsTest, DeterministicGivenRngState) {
  SystemConfig cfg;
  Rng a(77, 3);
  Rng b(77, 3);
  EXPECT_EQ(sample_channels(cfg, a), sample_channels(cfg, b));
}

TEST(SampleChannelsTest, BeamsHaveUnitColumns) {
  SystemConfig cfg;
  Rng rng(2);
  const ChannelSet ch = sample_channels(cfg, rng);
  for (const auto& w : ch.uplink_beam) EXPECT_NEAR(frobenius_norm(w), 1.0, 1e-12);
  for (const auto& w : ch.downlink_beam) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      EXPECT_NEAR(frobenius_norm(w.column(j)), 1.0, 1e-12);
    }
  }
}

TEST(SampleChannelsTest, ZeroSelfInterferenceGain) {
  SystemConfig cfg;
  cfg.si_gain = 0.0;
  Rng rng(3);
  const ChannelSet ch = sample_channels(cfg, rng);
  EXPECT_EQ(frobenius_norm(ch.agg_self_interference), 0.0);
  EXPECT_EQ(frobenius_norm(ch.su_self_interference), 0.0);
}

TEST(SampleChannelsTest, EntryVarianceIsOne) {
  SystemConfig cfg;
  cfg.si_gain = 4.0;
  double up = 0.0;
  double si = 0.0;
  const int trials = 2000;
  for (int t = 0; t < trials; ++t) {
    Rng rng(9, static_cast<std::uint64_t>(t));
    const ChannelSet ch = sample_channels(cfg, rng);
    const double f = frobenius_norm(ch.uplink_estimate[0]);
    up += f * f / 16.0;
    const double g = frobenius_norm(ch.agg_self_interference);
    si += g * g / 64.0;
  }
  EXPECT_NEAR(up / trials, 1.0, 0.03);
  EXPECT_NEAR(si / trials, 4.0, 0.1);
}

TEST(ComposeTrueChannelTest, AlphaZeroIsIdentity) {
  Rng rng(4);
  CMatrix h(3, 2);
  CMatrix d(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      h(i, j) = rng.complex_normal();
      d(i, j) = rng.complex_normal();
    }
  }
  EXPECT_EQ(compose_true_channel(h, d, 0.0), h);
  const CMatrix c = compose_true_channel(h, d, 0.6);
  EXPECT_NEAR(std::abs(c(1, 1) - (0.8 * h(1, 1) + 0.6 * d(1, 1))), 0.0, 1e-15);
  EXPECT_THROW(compose_true_channel(h, CMatrix(2, 2), 0.1), DimensionMismatch);
}

TEST(SelectAntennasTest, MaxNormKeepsStrongestRows) {
  const CMatrix h(4, 1, {1.0, 3.0, 2.0, 0.5});
  const CMatrix v = select_antennas(h, 2, SelectionStrategy::kMaxNorm);
  EXPECT_EQ(v(1, 1), cplx(1.0));
  EXPECT_EQ(v(2, 2), cplx(1.0));
  EXPECT_EQ(v(0, 0), cplx(0.0));
  EXPECT_EQ(v(3, 3), cplx(0.0));
  EXPECT_NEAR(trace(v).real(), 2.0, 0.0);
}

TEST(SelectAntennasTest, TiesGoToLowerIndex) {
  const CMatrix h(3, 1, {1.0, 1.0, 1.0});
  const CMatrix v = select_antennas(h, 1, SelectionStrategy::kMaxNorm);
  EXPECT_EQ(v(0, 0), cplx(1.0));
  EXPECT_EQ(v(1, 1), cplx(0.0));
}

TEST(SelectAntennasTest, StrategiesAndBounds) {
  const CMatrix h(4, 1, {1.0, 3.0, 2.0, 0.5});
  EXPECT_EQ(select_antennas(h, 4, SelectionStrategy::kAll), CMatrix::identity(4));
  const CMatrix first = select_antennas(h, 2, SelectionStrategy::kFirstN);
  EXPECT_EQ(first(0, 0), cplx(1.0));
  EXPECT_EQ(first(1, 1), cplx(1.0));
  EXPECT_THROW(select_antennas(h, 0, SelectionStrategy::kFirstN), std::out_of_range);
  EXPECT_THROW(select_antennas(h, 5, SelectionStrategy::kFirstN), std::out_of_range);
  EXPECT_THROW(select_antennas(h, 2, SelectionStrategy::kRandom), std::invalid_argument);
  Rng rng(5);
  EXPECT_NEAR(trace(select_antennas(h, 3, SelectionStrategy::kRandom, &rng)).real(), 3.0,
              0.0);
}

}  // namespace
}  // namespace swipt
