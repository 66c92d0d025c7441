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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "swipt/distributions.hpp"
#include "swipt/montecarlo.hpp"

namespace swipt::cli {

inline constexpr std::size_t kCurvePoints = 512;

// Decimal with 17 significant digits; nan / inf spelled as such.
std::string format_number(double x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

// bin_lo, bin_hi, mass, density per bin.
CsvTable histogram_table(const EmpiricalDist& emp);

// kCurvePoints points spanning the histogram support; linear SINR, dB and
// pdf columns.
CsvTable pdf_curve_table(const EmpiricalDist& emp, const ScalarLaw& law);

// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json read_json(const std::filesystem::path& path);

// ISO-8601 UTC, second resolution.
std::string utc_timestamp();

}  // namespace swipt::cli
