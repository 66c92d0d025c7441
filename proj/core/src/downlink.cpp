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

#include "swipt/downlink.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

void check_user(const SystemConfig& cfg, const ChannelSet& channels, int k) {
  if (k < 0 || k >= cfg.users ||
      static_cast<std::size_t>(k) >= channels.downlink_estimate.size()) {
    throw std::out_of_range("downlink: user index " + std::to_string(k) +
                            " out of range");
  }
}

// V_i w_i, N_t x N_u.
CMatrix beam(const ChannelSet& channels, int i) {
  return matmul(channels.downlink_selection[i], channels.downlink_beam[i]);
}

CMatrix gram_outer(const CMatrix& m) { return matmul(m, conj_transpose(m)); }

// w^u G^u with w^u = [w_1^u ... w_K^u].
CMatrix uplink_leak(const ChannelSet& channels) {
  const std::size_t nu = channels.uplink_beam.front().rows();
  const std::size_t k = channels.uplink_beam.size();
  CMatrix w(nu, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < nu; ++r) w(r, i) = channels.uplink_beam[i](r, 0);
  }
  return matmul(w, channels.su_self_interference);
}

CMatrix downlink_sinr(const SystemConfig& cfg, const ChannelSet& channels, int k,
                      double alpha) {
  check_user(cfg, channels, k);
  const CMatrix& f = channels.downlink_estimate[k];
  const std::size_t nu = f.rows();
  const double keep = 1.0 - alpha * alpha;

  const CMatrix phi = hermitian_part(gram_outer(matmul(f, beam(channels, k))));

  CMatrix psi(nu, nu);
  for (int i = 0; i < cfg.users; ++i) {
    if (i == k) continue;
    psi += gram_outer(matmul(f, beam(channels, i)));
  }
  if (alpha > 0.0) {
    CMatrix err(nu, nu);
    for (int i = 0; i < cfg.users; ++i) {
      err += gram_outer(matmul(channels.downlink_error[i], beam(channels, i)));
    }
    psi += err * cplx(downlink_error_weight(alpha));
  }
  const CMatrix leak = uplink_leak(channels);
  const double r = cfg.uplink_power / (keep * cfg.downlink_power);
  psi += matmul(conj_transpose(leak), leak) * cplx(r);
  psi += CMatrix::identity(nu) * cplx(downlink_noise_floor(cfg) / keep);

  const CMatrix root = psd_inv_sqrt(hermitian_part(psi));
  return hermitian_part(matmul(matmul(root, phi), root));
}

}  // namespace

double downlink_noise_floor(const SystemConfig& cfg) {
  return cfg.su_noise_var / cfg.downlink_power +
         cfg.ps_noise_var / (cfg.ps_ratio * cfg.downlink_power);
}

double downlink_error_weight(double alpha) {
  return alpha * alpha / (1.0 - alpha * alpha);
}

CMatrix downlink_sinr_perfect(const SystemConfig& cfg, const ChannelSet& channels,
                              int k) {
  return downlink_sinr(cfg, channels, k, 0.0);
}

CMatrix downlink_sinr_imperfect(const SystemConfig& cfg,
                                const ChannelSet& channels, int k) {
  return downlink_sinr(cfg, channels, k, cfg.csi_error);
}

SplitSignal split_received_signal(const CMatrix& y, double rho,
                                  const CMatrix& ps_noise) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("split_received_signal: rho must lie in (0, 1]");
  }
  if (ps_noise.rows() != y.rows() || ps_noise.cols() != y.cols()) {
    throw DimensionMismatch("split_received_signal: noise shape differs from y");
  }
  return {y * cplx(std::sqrt(rho)) + ps_noise, y * cplx(std::sqrt(1.0 - rho))};
}

double harvested_power(const CMatrix& y_eh, double eta_eh) {
  const double f = frobenius_norm(y_eh);
  return eta_eh * f * f / static_cast<double>(y_eh.cols());
}

CMatrix downlink_received_signal(const SystemConfig& cfg,
                                 const ChannelSet& channels, int k, Rng& rng,
                                 std::size_t snapshots) {
  check_user(cfg, channels, k);
  const CMatrix f = compose_true_channel(channels.downlink_estimate[k],
                                         channels.downlink_error[k], cfg.csi_error);
  const std::size_t nu = f.rows();
  auto symbols = [&](std::size_t rows, double variance) {
    CMatrix s(rows, snapshots);
    const double sd = std::sqrt(variance);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < snapshots; ++j) s(i, j) = sd * rng.complex_normal();
    }
    return s;
  };

  CMatrix y(nu, snapshots);
  for (int i = 0; i < cfg.users; ++i) {
    const CMatrix g = matmul(f, beam(channels, i));
    y += matmul(g, symbols(g.cols(), 1.0)) * cplx(std::sqrt(cfg.downlink_power));
  }
  const CMatrix leak_h = conj_transpose(uplink_leak(channels));
  y += matmul(leak_h, symbols(leak_h.cols(), 1.0)) * cplx(std::sqrt(cfg.uplink_power));
  y += symbols(nu, cfg.su_noise_var);
  return y;
}

MomentMatchPerfect moment_match_perfect(const SystemConfig& cfg) {
  const double k = cfg.users;
  const double nt = cfg.agg_tx_antennas;
  const double r = cfg.uplink_power / cfg.downlink_power;
  if (k * (1.0 + r) - 1.0 == 0.0) {
    throw InvalidParameters("moment_match_perfect: K (1 + r) = 1");
  }
  MomentMatchPerfect m;
  m.sigma_d0 = downlink_noise_floor(cfg);
  m.eta_s = (k * (1.0 + r * r) - 1.0) / (k * (1.0 + r) - 1.0);
  m.n_s = nt * std::pow(r * k + k - 1.0, 2) / (r * r * k + k - 1.0);
  m.eta_v = m.eta_s * m.n_s / (m.n_s + m.sigma_d0);
  m.n_v = m.n_s / 2.0 + m.sigma_d0 * (2.0 * m.n_s + m.sigma_d0) / (2.0 * m.n_s);
  return m;
}

MomentMatchImperfect moment_match_imperfect(const SystemConfig& cfg) {
  const double alpha = cfg.csi_error;
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw InvalidParameters("moment_match_imperfect: alpha must lie in [0, 1)");
  }
  const double k = cfg.users;
  const double nt = cfg.agg_tx_antennas;
  const double keep = 1.0 - alpha * alpha;
  const double r = cfg.uplink_power / cfg.downlink_power;
  const double rp = cfg.uplink_power / (keep * cfg.downlink_power);
  const double beta = downlink_error_weight(alpha);
  if (k * (1.0 + r) - 1.0 == 0.0) {
    throw InvalidParameters("moment_match_imperfect: K (1 + r) = 1");
  }

  MomentMatchImperfect m;
  m.eta_g = (k * (1.0 + rp * rp) - 1.0) / (k * (1.0 + r) - 1.0);
  m.n_g = 2.0 * nt * std::pow(rp * k + k - 1.0, 2) / (rp * rp * k + k - 1.0);
  const double err_dof = 2.0 * nt * k;
  m.eta_q = (m.n_g * m.eta_g * m.eta_g + err_dof * beta * beta) /
            (m.n_g * m.eta_g + err_dof * beta);
  m.n_q = std::pow(err_dof * beta + m.n_g * m.eta_g, 2) /
          (err_dof * beta * beta + m.n_g * m.eta_g * m.eta_g);
  m.sigma_d0_hat = downlink_noise_floor(cfg) / keep;
  m.eta_v = m.eta_q * m.n_q / (m.n_q + m.sigma_d0_hat);
  m.n_v = m.n_q / 2.0 +
          m.sigma_d0_hat * (2.0 * m.n_q + m.sigma_d0_hat) / (2.0 * m.n_q);
  return m;
}

BetaIIParams beta2_from_moments(int n_t, double eta_v, double n_v, int dim) {
  const double nt = n_t;
  const double denom = nt + n_v - 1.0;
  BetaIIParams p;
  p.dim = dim;
  p.n1 = nt * (nt + (n_v - 2.0) * eta_v + 1.0) / (eta_v * denom);
  p.n2 = (n_v * (nt - 3.0 * eta_v + 2.0) + n_v * n_v * eta_v + 2.0 * (eta_v - 1.0)) /
         denom;
  return p;
}

BetaIIParams beta2_params_perfect(const SystemConfig& cfg) {
  const auto m = moment_match_perfect(cfg);
  return beta2_from_moments(cfg.agg_tx_antennas, m.eta_v, m.n_v, cfg.su_antennas);
}

BetaIIParams beta2_params_imperfect(const SystemConfig& cfg) {
  const auto m = moment_match_imperfect(cfg);
  return beta2_from_moments(cfg.agg_tx_antennas, m.eta_v, m.n_v, cfg.su_antennas);
}

}  // namespace swipt
