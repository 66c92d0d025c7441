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
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace swipt {

// Every scalar of the full-duplex SWIPT MU-MIMO link. Defaults are the
// reference scenario: 3 sensor users with 2 antennas, an 8x8 aggregator,
// alpha = 0.2, rho = 0.3, 40% harvesting efficiency, unit powers and noises.
//
// The config-file key of each field is given in the trailing comment; those
// keys are the only ones accepted by config_from_json.
struct SystemConfig {
  int users = 3;                  // K
  int agg_tx_antennas = 8;        // N_t
  int agg_rx_antennas = 8;        // N_r
  int su_antennas = 2;            // N_u
  int selected_antennas = 8;      // N_sel
  double uplink_power = 1.0;      // p_u   [W]
  double downlink_power = 1.0;    // p_d   [W]
  double agg_noise_var = 1.0;     // sigma_u2
  double su_noise_var = 1.0;      // sigma_d2
  double ps_noise_var = 1.0;      // sigma_s2
  double ps_ratio = 0.3;          // rho
  double csi_error = 0.2;         // alpha
  double eh_efficiency = 0.4;     // eta_eh
  double si_gain = 1.0;           // si_gain
  std::uint64_t seed = 1;         // seed
  std::uint64_t mc_samples = 100000;  // mc_samples
};

struct ConfigViolation {
  std::string key;  // config-file key of the offending field
  std::string message;
};

// Complete list of violated invariants; empty means valid.
std::vector<ConfigViolation> validate_config(const SystemConfig& cfg);

// Throws ConfigError listing every violation.
void require_valid(const SystemConfig& cfg);

// Keys absent from the document keep their default. Unknown keys and
// type mismatches throw ConfigError naming the key. Does not validate.
SystemConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const SystemConfig& cfg);

// Reads and parses a JSON config file. Throws ConfigError on IO or parse
// failure, with the parser diagnostic.
SystemConfig load_config(const std::filesystem::path& path);

// Stream ranks fixed by construction: each user carries su_antennas streams
// on both links.
struct DerivedDims {
  int uplink_streams;    // d_k
  int downlink_streams;  // q_k
  int total_streams;     // d = sum_k d_k
};
DerivedDims derived_dims(const SystemConfig& cfg);

}  // namespace swipt
