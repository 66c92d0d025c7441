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

#include "swipt/channels.hpp"
#include "swipt/config.hpp"
#include "swipt/distributions.hpp"
#include "swipt/matrix.hpp"
#include "swipt/rng.hpp"

namespace swipt {

// sigma_d2 / p_d + sigma_s2 / (rho p_d).
double downlink_noise_floor(const SystemConfig& cfg);

// alpha^2 / (1 - alpha^2).
double downlink_error_weight(double alpha);

// Psi^{-1/2} Phi Psi^{-1/2} with
//   Phi = (F_k V_k w_k)(F_k V_k w_k)^H
//   Psi = sum_{i != k} F_k V_i w_i w_i^H V_i F_k^H + r (w^u G^u)^H (w^u G^u)
//         + sigma_d0 I,  r = p_u / p_d.
// N_u x N_u Hermitian PSD. Throws SingularMatrix for singular Psi.
CMatrix downlink_sinr_perfect(const SystemConfig& cfg, const ChannelSet& channels,
                              int k);

// As above on the estimate F_hat_k, with Psi extended by
// beta sum_i Delta_i V_i w_i w_i^H V_i Delta_i^H, beta = alpha^2 / (1 - alpha^2),
// and r, sigma_d0 both divided by (1 - alpha^2). alpha = 0 reproduces the
// perfect matrix exactly.
CMatrix downlink_sinr_imperfect(const SystemConfig& cfg,
                                const ChannelSet& channels, int k);

struct SplitSignal {
  CMatrix id;  // sqrt(rho) y + n_s
  CMatrix eh;  // sqrt(1 - rho) y
};

// y already carries the thermal noise. Throws std::invalid_argument unless
// 0 < rho <= 1 and ps_noise has the shape of y.
SplitSignal split_received_signal(const CMatrix& y, double rho,
                                  const CMatrix& ps_noise);

// eta_eh times the mean snapshot energy ||y_eh||_F^2 / columns.
double harvested_power(const CMatrix& y_eh, double eta_eh);

// N_u x snapshots received block at user k through the true channel:
// sqrt(p_d) sum_i F_k V_i w_i s_i + sqrt(p_u) (w^u G^u)^H s + n, with unit
// symbols and CN(0, sigma_d2) noise.
CMatrix downlink_received_signal(const SystemConfig& cfg,
                                 const ChannelSet& channels, int k, Rng& rng,
                                 std::size_t snapshots);

struct MomentMatchPerfect {
  double eta_s = 0.0;
  double n_s = 0.0;
  double eta_v = 0.0;
  double n_v = 0.0;
  double sigma_d0 = 0.0;
};

struct MomentMatchImperfect {
  double eta_g = 0.0;
  double n_g = 0.0;
  double eta_q = 0.0;
  double n_q = 0.0;
  double eta_v = 0.0;
  double n_v = 0.0;
  double sigma_d0_hat = 0.0;
};

MomentMatchPerfect moment_match_perfect(const SystemConfig& cfg);
MomentMatchImperfect moment_match_imperfect(const SystemConfig& cfg);

// N1 = N_t (N_t + (N_v - 2) eta + 1) / (eta (N_t + N_v - 1))
// N2 = (N_v (N_t - 3 eta + 2) + N_v^2 eta + 2 (eta - 1)) / (N_t + N_v - 1)
// Parameters are returned even when not normalizable; callers check
// BetaIIParams::normalizable().
BetaIIParams beta2_from_moments(int n_t, double eta_v, double n_v, int dim);
BetaIIParams beta2_params_perfect(const SystemConfig& cfg);
BetaIIParams beta2_params_imperfect(const SystemConfig& cfg);

}  // namespace swipt
