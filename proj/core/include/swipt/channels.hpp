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

#include <vector>

#include "swipt/config.hpp"
#include "swipt/matrix.hpp"
#include "swipt/rng.hpp"

namespace swipt {

enum class SelectionStrategy { kAll, kFirstN, kMaxNorm, kRandom };

// One realisation of every channel in the link, plus the fixed beamformers
// and antenna-selection matrices used with it.
struct ChannelSet {
  std::vector<CMatrix> uplink_estimate;    // H_hat_k, N_r x N_u
  std::vector<CMatrix> uplink_error;       // Delta_k, N_r x N_u
  std::vector<CMatrix> downlink_estimate;  // F_hat_k, N_u x N_t
  std::vector<CMatrix> downlink_error;     // Delta_k^d, N_u x N_t
  CMatrix agg_self_interference;           // G^d, N_r x N_t
  CMatrix su_self_interference;            // G^u, K x N_u
  std::vector<CMatrix> uplink_beam;        // w_k^u, N_u x 1, unit norm
  std::vector<CMatrix> downlink_beam;      // w_k^d, N_t x N_u, unit columns
  std::vector<CMatrix> uplink_selection;   // V_k^u, N_r x N_r
  std::vector<CMatrix> downlink_selection; // V_k^d, N_t x N_t

  bool operator==(const ChannelSet&) const = default;
};

// Draws one realisation. All entries are CN(0, 1); self-interference
// channels are scaled to variance si_gain. Beamformers are Gaussian draws
// with normalised columns, independent of the channels. Uplink selection
// ranks the rows of H_hat_k, downlink selection ranks the transmit antennas
// (columns of F_hat_k). Deterministic given the generator state.
ChannelSet sample_channels(const SystemConfig& cfg, Rng& rng,
                           SelectionStrategy strategy = SelectionStrategy::kMaxNorm);

// sqrt(1 - alpha^2) h_hat + alpha delta. alpha == 0 returns h_hat unchanged.
CMatrix compose_true_channel(const CMatrix& h_hat, const CMatrix& delta,
                             double alpha);

// Diagonal 0/1 matrix of size channel.rows() with exactly n_sel ones, one
// per selected row. kMaxNorm keeps the rows of largest Euclidean norm, ties
// to the lower index; kRandom needs rng. Throws std::out_of_range when
// n_sel is outside [1, rows].
CMatrix select_antennas(const CMatrix& channel, int n_sel,
                        SelectionStrategy strategy, Rng* rng = nullptr);

}  // namespace swipt
