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

#include "swipt/uplink.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

void check_user(const SystemConfig& cfg, const ChannelSet& channels, int k) {
  if (k < 0 || k >= cfg.users ||
      static_cast<std::size_t>(k) >= channels.uplink_estimate.size()) {
    throw std::out_of_range("uplink: user index " + std::to_string(k) +
                            " out of range");
  }
}

double squared_norm(const CMatrix& m) {
  const double f = frobenius_norm(m);
  return f * f;
}

// Receive-side image V_k G^d x of the aggregated downlink beam
// x = sum_i V_i^d w_i^d 1 / sqrt(K N_u).
std::optional<CMatrix> self_interference_direction(const SystemConfig& cfg,
                                                   const ChannelSet& channels,
                                                   const CMatrix& v) {
  if (!(cfg.si_gain > 0.0)) return std::nullopt;
  const std::size_t nt = channels.agg_self_interference.cols();
  CMatrix x(nt, 1);
  for (std::size_t i = 0; i < channels.downlink_beam.size(); ++i) {
    const CMatrix vw = matmul(channels.downlink_selection[i], channels.downlink_beam[i]);
    for (std::size_t r = 0; r < nt; ++r) {
      for (std::size_t c = 0; c < vw.cols(); ++c) x(r, 0) += vw(r, c);
    }
  }
  x *= cplx(1.0 / std::sqrt(static_cast<double>(cfg.users * cfg.su_antennas)));
  return matmul(v, matmul(channels.agg_self_interference, x));
}

struct Stack {
  CMatrix h;                        // V_k H_k
  std::optional<CMatrix> nulled;    // orthonormal interference basis
  StackedChannel stacked;
};

Stack stack(const SystemConfig& cfg, const ChannelSet& channels, int k) {
  check_user(cfg, channels, k);
  const CMatrix& v = channels.uplink_selection[k];
  const CMatrix h = matmul(v, channels.uplink_estimate[k]);
  const std::size_t nr = h.rows();
  const std::size_t nu = h.cols();

  std::optional<CMatrix> interference;
  auto append = [&](const CMatrix& col) {
    interference = interference ? hconcat(*interference, col) : col;
  };
  for (int i = 0; i < cfg.users; ++i) {
    if (i == k) continue;
    append(matmul(v, matmul(channels.uplink_estimate[i], channels.uplink_beam[i])));
  }
  if (auto si = self_interference_direction(cfg, channels, v)) append(*si);

  std::optional<CMatrix> nulled;
  if (interference) nulled = orthonormal_basis(*interference);
  const int m = nulled ? static_cast<int>(nulled->cols()) : 0;

  const CMatrix span = nulled ? hconcat(h, *nulled) : h;
  const auto span_basis = orthonormal_basis(span);
  if (!span_basis || span_basis->cols() != nu + static_cast<std::size_t>(m)) {
    throw RankDeficient("uplink: user " + std::to_string(k) +
                        " channel not independent of the interference span");
  }

  Stack out{h, nulled, {h, std::nullopt, static_cast<int>(nu), m}};
  std::optional<CMatrix> a = nulled;
  if (auto completion = orthonormal_complement(*span_basis)) {
    a = a ? hconcat(*a, *completion) : *completion;
  }
  if (a) {
    if (h.cols() + a->cols() != nr) {
      throw RankDeficient("uplink: stacked channel is not square");
    }
    out.stacked.h_tilde = hconcat(h, *a);
  } else if (nu != nr) {
    throw RankDeficient("uplink: stacked channel is not square");
  }
  out.stacked.a_block = a;
  return out;
}

}  // namespace

StackedChannel build_stacked_channel(const SystemConfig& cfg,
                                     const ChannelSet& channels, int k, Csi) {
  return stack(cfg, channels, k).stacked;
}

CMatrix zf_equalizer(const StackedChannel& stacked) {
  const CMatrix inv = invert(stacked.h_tilde);
  return inv.block(0, 0, static_cast<std::size_t>(stacked.streams), inv.cols());
}

namespace {

double scale_from(const SystemConfig& cfg, double w2, double j, Csi csi) {
  const double d = cfg.su_antennas;
  if (csi == Csi::kPerfect) {
    return cfg.uplink_power * w2 / (d * cfg.agg_noise_var);
  }
  const double a2 = cfg.csi_error * cfg.csi_error;
  const double p_total = cfg.users * cfg.uplink_power;
  const double noise = a2 * p_total * j + cfg.agg_noise_var;
  return (1.0 - a2) * cfg.uplink_power * w2 / (d * noise);
}

}  // namespace

double uplink_sinr_scale(const SystemConfig& cfg, const ChannelSet& channels,
                         int k, Csi csi) {
  check_user(cfg, channels, k);
  double j = 0.0;
  for (const auto& w : channels.uplink_beam) j += squared_norm(w);
  j /= static_cast<double>(derived_dims(cfg).total_streams);
  return scale_from(cfg, squared_norm(channels.uplink_beam[k]), j, csi);
}

double uplink_unit_beam_scale(const SystemConfig& cfg, Csi csi) {
  const double j = static_cast<double>(cfg.users) /
                   static_cast<double>(derived_dims(cfg).total_streams);
  return scale_from(cfg, 1.0, j, csi);
}

UplinkSinrRoutes uplink_sinr_routes(const SystemConfig& cfg,
                                    const ChannelSet& channels, int k, Csi csi) {
  const Stack s = stack(cfg, channels, k);
  const cplx c = uplink_sinr_scale(cfg, channels, k, csi);

  const CMatrix u = zf_equalizer(s.stacked);
  const CMatrix inverse_form =
      hermitian_part(invert(hermitian_part(matmul(u, conj_transpose(u))))) * c;

  CMatrix gram = matmul(conj_transpose(s.h), s.h);
  if (s.nulled) {
    const CMatrix qh = matmul(conj_transpose(*s.nulled), s.h);
    gram -= matmul(conj_transpose(qh), qh);
  }
  return {inverse_form, hermitian_part(gram) * c};
}

CMatrix uplink_sinr_perfect(const SystemConfig& cfg, const ChannelSet& channels,
                            int k) {
  return uplink_sinr_routes(cfg, channels, k, Csi::kPerfect).projection_form;
}

CMatrix uplink_sinr_imperfect(const SystemConfig& cfg,
                              const ChannelSet& channels, int k) {
  return uplink_sinr_routes(cfg, channels, k, Csi::kImperfect).projection_form;
}

int uplink_interference_rank(const SystemConfig& cfg) {
  const int directions = (cfg.users - 1) + (cfg.si_gain > 0.0 ? 1 : 0);
  return std::clamp(directions, 0, std::max(0, cfg.selected_antennas - cfg.su_antennas));
}

WishartParams uplink_wishart_law(const SystemConfig& cfg, double scale,
                                 UplinkDof dof) {
  const int d = cfg.su_antennas;
  const double n = dof == UplinkDof::kFullArray
                       ? 2.0 * cfg.agg_rx_antennas
                       : 2.0 * (cfg.selected_antennas - uplink_interference_rank(cfg));
  return {d, n, CMatrix::identity(static_cast<std::size_t>(d)) * cplx(scale)};
}

WishartParams uplink_wishart_perfect(const SystemConfig& cfg,
                                     const ChannelSet& channels, int k,
                                     UplinkDof dof) {
  return uplink_wishart_law(cfg, uplink_sinr_scale(cfg, channels, k, Csi::kPerfect), dof);
}

WishartParams uplink_wishart_imperfect(const SystemConfig& cfg,
                                       const ChannelSet& channels, int k,
                                       UplinkDof dof) {
  return uplink_wishart_law(cfg, uplink_sinr_scale(cfg, channels, k, Csi::kImperfect), dof);
}

}  // namespace swipt
