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

#include <optional>

#include "swipt/channels.hpp"
#include "swipt/config.hpp"
#include "swipt/distributions.hpp"
#include "swipt/matrix.hpp"

namespace swipt {

enum class Csi { kPerfect, kImperfect };

// H_tilde = [V_k H_k  A]. The first interference_rank columns of A are an
// orthonormal basis of the co-user beams and self-interference direction,
// the rest complete [V_k H_k, interference] to the full space.
struct StackedChannel {
  CMatrix h_tilde;
  std::optional<CMatrix> a_block;  // absent when N_u == N_r
  int streams = 0;
  int interference_rank = 0;
};

// Both regimes stack the estimate H_hat (with perfect CSI it is the channel);
// they differ only in the SINR scale. Throws RankDeficient when
// [V_k H_k, interference] loses column rank.
StackedChannel build_stacked_channel(const SystemConfig& cfg,
                                     const ChannelSet& channels, int k, Csi csi);

// [I_{d_k} 0] H_tilde^{-1}. Throws SingularMatrix.
CMatrix zf_equalizer(const StackedChannel& stacked);

// Both evaluations of the post-ZF SINR matrix.
struct UplinkSinrRoutes {
  CMatrix inverse_form;     // c * (Z (H_tilde^H H_tilde)^{-1} Z^H)^{-1}
  CMatrix projection_form;  // c * H^H (I - A A^H) H
};

UplinkSinrRoutes uplink_sinr_routes(const SystemConfig& cfg,
                                    const ChannelSet& channels, int k, Csi csi);

// Projection form; d_k x d_k Hermitian PSD.
CMatrix uplink_sinr_perfect(const SystemConfig& cfg, const ChannelSet& channels,
                            int k);
CMatrix uplink_sinr_imperfect(const SystemConfig& cfg,
                              const ChannelSet& channels, int k);

// Scalar c in front of the SINR matrix:
//   perfect   p_u |w_k|^2 / (d_k sigma_u2)
//   imperfect (1 - a^2) p_u |w_k|^2 / (d_k (a^2 P J + sigma_u2)),
// P = K p_u, J = sum_i |w_i|^2 / d. Equal bit for bit at alpha = 0.
double uplink_sinr_scale(const SystemConfig& cfg, const ChannelSet& channels,
                         int k, Csi csi);
// The same scale for unit-norm beams, |w_i| = 1 for every user.
double uplink_unit_beam_scale(const SystemConfig& cfg, Csi csi);

// kProjectionRank: dof = 2 (N_sel - m), the rank of the ZF projection with
// m nulled interference directions. kFullArray: dof = 2 N_r.
enum class UplinkDof { kProjectionRank, kFullArray };

// Number of interference directions the receiver nulls for a generic
// realization: K - 1 co-users plus one self-interference direction when
// si_gain > 0, capped by the selected antennas left after the user's own
// streams.
int uplink_interference_rank(const SystemConfig& cfg);

// Wishart law of the SINR matrix for a given scalar scale.
WishartParams uplink_wishart_law(const SystemConfig& cfg, double scale,
                                 UplinkDof dof = UplinkDof::kProjectionRank);

WishartParams uplink_wishart_perfect(const SystemConfig& cfg,
                                     const ChannelSet& channels, int k,
                                     UplinkDof dof = UplinkDof::kProjectionRank);
WishartParams uplink_wishart_imperfect(const SystemConfig& cfg,
                                       const ChannelSet& channels, int k,
                                       UplinkDof dof = UplinkDof::kProjectionRank);

}  // namespace swipt
