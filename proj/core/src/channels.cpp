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

#include "swipt/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

CMatrix gaussian(std::size_t rows, std::size_t cols, Rng& rng,
                 double variance = 1.0) {
  CMatrix m(rows, cols);
  const double s = std::sqrt(variance);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = s * rng.complex_normal();
  }
  return m;
}

CMatrix normalised_columns(CMatrix m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) norm2 += std::norm(m(i, j));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) *= inv;
  }
  return m;
}

}  // namespace

ChannelSet sample_channels(const SystemConfig& cfg, Rng& rng,
                           SelectionStrategy strategy) {
  const auto k_users = static_cast<std::size_t>(cfg.users);
  const auto nr = static_cast<std::size_t>(cfg.agg_rx_antennas);
  const auto nt = static_cast<std::size_t>(cfg.agg_tx_antennas);
  const auto nu = static_cast<std::size_t>(cfg.su_antennas);

  ChannelSet ch{
      .uplink_estimate = {},
      .uplink_error = {},
      .downlink_estimate = {},
      .downlink_error = {},
      .agg_self_interference = CMatrix(nr, nt),
      .su_self_interference = CMatrix(k_users, nu),
      .uplink_beam = {},
      .downlink_beam = {},
      .uplink_selection = {},
      .downlink_selection = {},
  };

  // Fixed draw order: uplink, downlink, self-interference, beams, selection.
  for (std::size_t k = 0; k < k_users; ++k) {
    ch.uplink_estimate.push_back(gaussian(nr, nu, rng));
    ch.uplink_error.push_back(gaussian(nr, nu, rng));
  }
  for (std::size_t k = 0; k < k_users; ++k) {
    ch.downlink_estimate.push_back(gaussian(nu, nt, rng));
    ch.downlink_error.push_back(gaussian(nu, nt, rng));
  }
  ch.agg_self_interference = gaussian(nr, nt, rng, cfg.si_gain);
  ch.su_self_interference = gaussian(k_users, nu, rng, cfg.si_gain);
  for (std::size_t k = 0; k < k_users; ++k) {
    ch.uplink_beam.push_back(normalised_columns(gaussian(nu, 1, rng)));
    ch.downlink_beam.push_back(normalised_columns(gaussian(nt, nu, rng)));
  }
  for (std::size_t k = 0; k < k_users; ++k) {
    ch.uplink_selection.push_back(select_antennas(
        ch.uplink_estimate[k], cfg.selected_antennas, strategy, &rng));
    ch.downlink_selection.push_back(
        select_antennas(conj_transpose(ch.downlink_estimate[k]),
                        std::min(cfg.selected_antennas, cfg.agg_tx_antennas),
                        strategy, &rng));
  }
  return ch;
}

CMatrix compose_true_channel(const CMatrix& h_hat, const CMatrix& delta,
                             double alpha) {
  if (h_hat.rows() != delta.rows() || h_hat.cols() != delta.cols()) {
    throw DimensionMismatch("compose_true_channel: estimate and error shapes differ");
  }
  if (alpha == 0.0) return h_hat;
  return std::sqrt(1.0 - alpha * alpha) * h_hat + alpha * delta;
}

CMatrix select_antennas(const CMatrix& channel, int n_sel,
                        SelectionStrategy strategy, Rng* rng) {
  const auto n = static_cast<int>(channel.rows());
  if (n_sel < 1 || n_sel > n) {
    throw std::out_of_range("select_antennas: n_sel=" + std::to_string(n_sel) +
                            " outside [1, " + std::to_string(n) + "]");
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  switch (strategy) {
    case SelectionStrategy::kAll:
      n_sel = n;
      break;
    case SelectionStrategy::kFirstN:
      break;
    case SelectionStrategy::kMaxNorm: {
      std::vector<double> norm2(order.size(), 0.0);
      for (int i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < channel.cols(); ++j) {
          norm2[i] += std::norm(channel(i, j));
        }
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return norm2[a] > norm2[b]; });
      break;
    }
    case SelectionStrategy::kRandom: {
      if (rng == nullptr) {
        throw std::invalid_argument("select_antennas: kRandom needs an rng");
      }
      for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng->below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
      }
      break;
    }
  }

  std::vector<double> diag(order.size(), 0.0);
  for (int i = 0; i < n_sel; ++i) diag[order[i]] = 1.0;
  return CMatrix::diagonal(diag);
}

}  // namespace swipt
