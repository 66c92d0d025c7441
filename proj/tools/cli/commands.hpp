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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swipt/montecarlo.hpp"

namespace swipt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

struct RunRequest {
  std::filesystem::path config_path;
  Scenario scenario = Scenario::kUplinkPerfect;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_dir;
  unsigned workers = 1;
  Reduction reduction = Reduction::kFirstStream;
};

enum class SweepAxis { kRxAntennas, kAlpha, kRho, kUsers };

std::optional<SweepAxis> parse_axis(const std::string& name);
std::string to_string(SweepAxis axis);

// Applies one sweep value; N_t and N_sel follow an N_r change. Throws
// std::invalid_argument for non-integer values on integer axes.
SystemConfig apply_axis(SystemConfig cfg, SweepAxis axis, double value);

struct SweepRequest {
  RunRequest base;
  SweepAxis axis = SweepAxis::kRxAntennas;
  std::vector<double> values;
};

// Worker count from SWIPT_SINR_WORKERS, 1 when unset or malformed.
unsigned workers_from_env();

// Prints violations to out; 0 when valid, 1 on violations or unreadable
// or malformed files.
int cmd_validate(const std::filesystem::path& config_path, std::ostream& out,
                 std::ostream& err);

// Writes histogram.csv, pdf_curve.csv, report.json and manifest.json.
int cmd_run(const RunRequest& req, std::ostream& out, std::ostream& err);

// One run per value in <out>/<axis>_<value>/ plus summary.csv. Failed
// points are recorded and the sweep goes on; any failure gives exit 2.
int cmd_sweep(const SweepRequest& req, std::ostream& out, std::ostream& err);

}  // namespace swipt::cli
