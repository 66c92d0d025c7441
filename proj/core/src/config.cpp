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

#include "swipt/config.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <string_view>
#include <type_traits>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

using Json = nlohmann::json;

struct Field {
  std::string_view key;
  std::function<void(SystemConfig&, const Json&)> read;
  std::function<Json(const SystemConfig&)> write;
};

template <typename T>
T get_as(const Json& value, std::string_view key) {
  const bool ok = std::is_integral_v<T> ? value.is_number_integer()
                                        : value.is_number();
  if (!ok) {
    throw ConfigError("config key '" + std::string(key) + "': expected " +
                      (std::is_integral_v<T> ? "an integer" : "a number") +
                      ", got " + value.dump());
  }
  if constexpr (std::is_unsigned_v<T>) {
    if (value.is_number_integer() && value.get<long long>() < 0 &&
        !value.is_number_unsigned()) {
      throw ConfigError("config key '" + std::string(key) +
                        "': expected a non-negative integer");
    }
  }
  return value.get<T>();
}

#define SWIPT_FIELD(KEY, MEMBER)                                          \
  Field {                                                                 \
    KEY,                                                                  \
        [](SystemConfig& c, const Json& v) {                              \
          c.MEMBER = get_as<decltype(c.MEMBER)>(v, KEY);                  \
        },                                                                \
        [](const SystemConfig& c) { return Json(c.MEMBER); }              \
  }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      SWIPT_FIELD("K", users),
      SWIPT_FIELD("N_t", agg_tx_antennas),
      SWIPT_FIELD("N_r", agg_rx_antennas),
      SWIPT_FIELD("N_u", su_antennas),
      SWIPT_FIELD("N_sel", selected_antennas),
      SWIPT_FIELD("p_u", uplink_power),
      SWIPT_FIELD("p_d", downlink_power),
      SWIPT_FIELD("sigma_u2", agg_noise_var),
      SWIPT_FIELD("sigma_d2", su_noise_var),
      SWIPT_FIELD("sigma_s2", ps_noise_var),
      SWIPT_FIELD("rho", ps_ratio),
      SWIPT_FIELD("alpha", csi_error),
      SWIPT_FIELD("eta_eh", eh_efficiency),
      SWIPT_FIELD("si_gain", si_gain),
      SWIPT_FIELD("seed", seed),
      SWIPT_FIELD("mc_samples", mc_samples),
  };
  return table;
}

#undef SWIPT_FIELD

}  // namespace

std::vector<ConfigViolation> validate_config(const SystemConfig& cfg) {
  std::vector<ConfigViolation> out;
  auto fail = [&](std::string key, std::string msg) {
    out.push_back({std::move(key), std::move(msg)});
  };

  if (cfg.users < 1) fail("K", "at least one user is required");
  if (cfg.agg_rx_antennas < 1) fail("N_r", "must be >= 1");
  if (cfg.su_antennas < 1) fail("N_u", "must be >= 1");
  if (cfg.agg_tx_antennas != cfg.agg_rx_antennas) {
    fail("N_t", "aggregator must have N_t == N_r");
  }
  if (cfg.su_antennas > cfg.agg_rx_antennas) {
    fail("N_u", "antenna ordering violated: N_u must not exceed N_r");
  }
  if (cfg.selected_antennas < 1 ||
      cfg.selected_antennas > cfg.agg_rx_antennas) {
    fail("N_sel", "must satisfy 1 <= N_sel <= N_r");
  }
  if (!(cfg.ps_ratio > 0.0 && cfg.ps_ratio <= 1.0)) {
    fail("rho", "power-splitting ratio must lie in (0, 1]");
  }
  if (!(cfg.csi_error >= 0.0 && cfg.csi_error < 1.0)) {
    fail("alpha", "CSI error coefficient must lie in [0, 1)");
  }
  if (!(cfg.eh_efficiency > 0.0 && cfg.eh_efficiency <= 1.0)) {
    fail("eta_eh", "conversion efficiency must lie in (0, 1]");
  }
  auto positive = [&](const char* key, double v) {
    if (!(v > 0.0)) fail(key, "must be > 0");
  };
  positive("p_u", cfg.uplink_power);
  positive("p_d", cfg.downlink_power);
  positive("sigma_u2", cfg.agg_noise_var);
  positive("sigma_d2", cfg.su_noise_var);
  positive("sigma_s2", cfg.ps_noise_var);
  if (!(cfg.si_gain >= 0.0)) fail("si_gain", "must be >= 0");
  return out;
}

void require_valid(const SystemConfig& cfg) {
  const auto violations = validate_config(cfg);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid configuration:";
  for (const auto& v : violations) msg << " [" << v.key << "] " << v.message << ";";
  throw ConfigError(msg.str());
}

SystemConfig config_from_json(const Json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("config document must be a JSON object");
  }
  SystemConfig cfg;
  bool explicit_sel = false;
  for (const auto& [key, value] : doc.items()) {
    const Field* match = nullptr;
    for (const auto& f : fields()) {
      if (f.key == key) match = &f;
    }
    if (match == nullptr) {
      throw ConfigError("unknown config key '" + key + "'");
    }
    match->read(cfg, value);
    if (key == "N_sel") explicit_sel = true;
  }
  // All receive antennas are selected unless stated otherwise.
  if (!explicit_sel) cfg.selected_antennas = cfg.agg_rx_antennas;
  return cfg;
}

Json config_to_json(const SystemConfig& cfg) {
  Json doc = Json::object();
  for (const auto& f : fields()) doc[std::string(f.key)] = f.write(cfg);
  return doc;
}

SystemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("cannot parse config file '" + path.string() +
                      "': " + e.what());
  }
  return config_from_json(doc);
}

DerivedDims derived_dims(const SystemConfig& cfg) {
  return {cfg.su_antennas, cfg.su_antennas, cfg.users * cfg.su_antennas};
}

}  // namespace swipt
