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

#include "oracles.hpp"
#include "swipt/downlink.hpp"
#include "swipt/errors.hpp"

namespace swipt {
namespace {

ChannelSet draw(const SystemConfig& cfg, std::uint64_t stream) {
  Rng rng(cfg.seed, stream);
  return sample_channels(cfg, rng);
}

CMatrix signal_part(const ChannelSet& ch, int k) {
  const CMatrix g =
      matmul(ch.downlink_estimate[k], matmul(ch.downlink_selection[k], ch.downlink_beam[k]));
  return matmul(g, conj_transpose(g));
}

TEST(DownlinkSinrTest, SingleUserNoSelfInterferenceIsNoiseOnly) {
  SystemConfig cfg;
  cfg.users = 1;
  cfg.si_gain = 0.0;
  const auto ch = draw(cfg, 1);
  const CMatrix expected = signal_part(ch, 0) * cplx(1.0 / downlink_noise_floor(cfg));
  EXPECT_LT(max_abs_diff(downlink_sinr_perfect(cfg, ch, 0), expected), 1e-12);
}

TEST(DownlinkSinrTest, CompositeNoiseFloor) {
  SystemConfig cfg;
  EXPECT_NEAR(downlink_noise_floor(cfg), 1.0 + 1.0 / 0.3, 1e-15);
  SystemConfig full = cfg;
  full.ps_ratio = 1.0;
  for (double rho : {0.1, 0.3, 0.7}) {
    SystemConfig c = cfg;
    c.ps_ratio = rho;
    EXPECT_GT(downlink_noise_floor(c), downlink_noise_floor(full));
  }
}

TEST(DownlinkSinrTest, QuotientIsHermitianPsd) {
  SystemConfig cfg;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto ch = draw(cfg, 10 + t);
    for (const auto& g : {downlink_sinr_perfect(cfg, ch, 0), downlink_sinr_imperfect(cfg, ch, 2)}) {
      EXPECT_TRUE(is_hermitian(g, 1e-12));
      EXPECT_GE(hermitian_eigenvalues(g).front(), -1e-12);
    }
  }
}

TEST(DownlinkSinrTest, ImperfectAtAlphaZeroIsPerfectBitForBit) {
  SystemConfig cfg;
  cfg.csi_error = 0.0;
  const auto ch = draw(cfg, 2);
  for (int k = 0; k < cfg.users; ++k) {
    EXPECT_EQ(downlink_sinr_imperfect(cfg, ch, k), downlink_sinr_perfect(cfg, ch, k));
  }
}

TEST(DownlinkSinrTest, NoiseInflationUnderChannelError) {
  SystemConfig cfg;
  cfg.users = 1;
  cfg.si_gain = 0.0;
  cfg.csi_error = 0.2;
  auto ch = draw(cfg, 3);
  ch.downlink_error[0] = CMatrix(2, 8);
  const CMatrix p = downlink_sinr_perfect(cfg, ch, 0);
  const CMatrix q = downlink_sinr_imperfect(cfg, ch, 0);
  EXPECT_LT(max_abs_diff(q, p * cplx(0.96)), 1e-12 * frobenius_norm(p));
}

TEST(DownlinkSinrTest, ErrorWeight) {
  EXPECT_NEAR(downlink_error_weight(0.2), 1.0 / 24.0, 1e-15);
  EXPECT_EQ(downlink_error_weight(0.0), 0.0);
}

TEST(SplitSignalTest, Branches) {
  Rng rng(4);
  CMatrix y(2, 5);
  CMatrix n(2, 5);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      y(i, j) = rng.complex_normal();
      n(i, j) = 0.1 * rng.complex_normal();
    }
  }
  const auto full = split_received_signal(y, 1.0, n);
  EXPECT_EQ(frobenius_norm(full.eh), 0.0);
  const auto tiny = split_received_signal(y, 1e-300, n);
  EXPECT_LT(max_abs_diff(tiny.id, n), 1e-140);
  const auto s = split_received_signal(y, 0.3, n);
  const double id2 = std::pow(frobenius_norm(s.id - n), 2);
  const double eh2 = std::pow(frobenius_norm(s.eh), 2);
  EXPECT_NEAR(id2 + eh2, std::pow(frobenius_norm(y), 2), 1e-12);
  EXPECT_THROW(split_received_signal(y, 0.0, n), std::invalid_argument);
  EXPECT_THROW(split_received_signal(y, 1.5, n), std::invalid_argument);
  EXPECT_THROW(split_received_signal(y, 0.5, CMatrix(2, 4)), DimensionMismatch);
}

TEST(HarvestedPowerTest, LinearModel) {
  CMatrix y(1, 1);
  y(0, 0) = std::sqrt(10.0);
  EXPECT_NEAR(harvested_power(y, 0.4), 4.0, 1e-14);
  EXPECT_EQ(harvested_power(CMatrix(2, 3), 0.4), 0.0);
}

TEST(HarvestedPowerTest, DoublesWithDownlinkPowerNoiseFree) {
  SystemConfig cfg;
  cfg.si_gain = 0.0;
  cfg.su_noise_var = 1e-12;
  const auto ch = draw(cfg, 5);
  auto estimate = [&](double pd) {
    SystemConfig c = cfg;
    c.downlink_power = pd;
    Rng rng(99);
    const CMatrix y = downlink_received_signal(c, ch, 0, rng, 20000);
    return harvested_power(split_received_signal(y, c.ps_ratio, CMatrix(y.rows(), y.cols())).eh,
                           c.eh_efficiency);
  };
  EXPECT_NEAR(estimate(2.0) / estimate(1.0), 2.0, 2.0 * 0.03);
}

TEST(MomentMatchTest, EqualPowerCollapse) {
  SystemConfig cfg;
  const auto m = moment_match_perfect(cfg);
  EXPECT_NEAR(m.eta_s, 1.0, 1e-15);
  EXPECT_NEAR(m.n_s, 8.0 * 5.0, 1e-12);
  EXPECT_NEAR(m.sigma_d0, 1.0 + 1.0 / 0.3, 1e-15);
}

TEST(MomentMatchTest, NoiselessLimit) {
  SystemConfig cfg;
  cfg.uplink_power = 2.0;
  cfg.su_noise_var = 1e-14;
  cfg.ps_noise_var = 1e-14;
  const auto m = moment_match_perfect(cfg);
  EXPECT_NEAR(m.eta_v, m.eta_s, 1e-12);
  EXPECT_NEAR(m.n_v, m.n_s / 2.0, 1e-10);
}

TEST(MomentMatchTest, FirstMomentOfApproximation) {
  // eta_s W(N_s) has the mean trace of the summed interference Wisharts
  // W(N_t (K - 1)) + r W(N_t K).
  SystemConfig cfg;
  cfg.uplink_power = 2.0;
  const double r = 2.0;
  const auto m = moment_match_perfect(cfg);
  const int dim = 2;
  const CMatrix id = CMatrix::identity(dim);
  Rng rng(21);
  double exact = 0.0;
  double approx = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const CMatrix a = wishart_sample({dim, 2.0 * 8 * 2, id}, rng);
    const CMatrix b = wishart_sample({dim, 2.0 * 8 * 3, id}, rng);
    exact += trace(a).real() + r * trace(b).real();
    approx += m.eta_s * trace(wishart_sample({dim, 2.0 * m.n_s, id}, rng)).real();
  }
  EXPECT_NEAR(approx / exact, 1.0, 0.02);
}

TEST(MomentMatchTest, ImperfectDegeneration) {
  SystemConfig cfg;
  cfg.csi_error = 0.0;
  const auto p = moment_match_perfect(cfg);
  const auto q = moment_match_imperfect(cfg);
  EXPECT_NEAR(q.eta_g, p.eta_s, 1e-15);
  EXPECT_NEAR(q.eta_q, q.eta_g, 1e-15);
  EXPECT_NEAR(q.n_q, q.n_g, 1e-12);
  EXPECT_NEAR(q.n_g, 2.0 * p.n_s, 1e-12);
  EXPECT_NEAR(q.sigma_d0_hat, p.sigma_d0, 1e-15);
}

TEST(MomentMatchTest, ImperfectAtTwentyPercentError) {
  SystemConfig cfg;
  cfg.csi_error = 0.2;
  const auto m = moment_match_imperfect(cfg);
  for (double v : {m.eta_g, m.n_g, m.eta_q, m.n_q, m.eta_v, m.n_v, m.sigma_d0_hat}) {
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, 0.0);
  }
  EXPECT_NEAR(m.sigma_d0_hat, (1.0 + 1.0 / 0.3) / 0.96, 1e-14);
}

TEST(BetaIIParamsTest, UnitWeightCollapse) {
  const auto b = beta2_from_moments(8, 1.0, 13.5, 1);
  EXPECT_NEAR(b.n1, 8.0, 1e-13);
  EXPECT_NEAR(b.n2, 13.5, 1e-13);
}

TEST(BetaIIParamsTest, MatchesIndependentFormulas) {
  for (double rho : {0.3, 0.8}) {
    for (double pu : {0.5, 1.0, 3.0}) {
      SystemConfig cfg;
      cfg.ps_ratio = rho;
      cfg.uplink_power = pu;
      const auto ref = oracle::perfect_moments(3, 8, pu, 1, 1, 1, rho);
      const auto b = beta2_params_perfect(cfg);
      EXPECT_NEAR(b.n1, ref.n1, 1e-12 * ref.n1);
      EXPECT_NEAR(b.n2, ref.n2, 1e-12 * ref.n2);
      const auto refi = oracle::imperfect_moments(3, 8, pu, 1, 1, 1, rho, 0.2);
      const auto bi = beta2_params_imperfect(cfg);
      EXPECT_NEAR(bi.n1, refi.n1, 1e-12 * refi.n1);
      EXPECT_NEAR(bi.n2, refi.n2, 1e-12 * refi.n2);
    }
  }
}

TEST(BetaIIParamsTest, RegressionAnchors) {
  SystemConfig cfg;
  const auto b = beta2_params_perfect(cfg);
  EXPECT_NEAR(b.n1, 8.2471, 1e-4);
  EXPECT_NEAR(b.n2, 22.9212, 1e-4);
  EXPECT_EQ(b.dim, 2);
  EXPECT_TRUE(b.normalizable());
  const auto bi = beta2_params_imperfect(cfg);
  EXPECT_NEAR(bi.n1, 8.0345, 1e-4);
  EXPECT_NEAR(bi.n2, 45.5603, 1e-4);
}

TEST(BetaIIParamsTest, AlphaZeroKeepsTheFactorTwo) {
  SystemConfig cfg;
  cfg.csi_error = 0.0;
  const auto p = beta2_params_perfect(cfg);
  const auto q = beta2_params_imperfect(cfg);
  EXPECT_GT(std::abs(q.n2 - p.n2), 1.0);
}

}  // namespace
}  // namespace swipt
