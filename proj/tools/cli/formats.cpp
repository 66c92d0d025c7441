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

#include "formats.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace swipt::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_number(row[i]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) return t;
  std::stringstream head(line);
  for (std::string cell; std::getline(head, cell, ',');) t.header.push_back(cell);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      row.push_back(std::strtod(cell.c_str(), nullptr));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable histogram_table(const EmpiricalDist& emp) {
  CsvTable t{{"bin_lo_sinr_linear", "bin_hi_sinr_linear", "mass", "density_per_unit_sinr"}, {}};
  for (std::size_t i = 0; i < emp.bin_mass.size(); ++i) {
    const double lo = emp.bin_edges[i];
    const double hi = emp.bin_edges[i + 1];
    t.rows.push_back({lo, hi, emp.bin_mass[i], emp.bin_mass[i] / (hi - lo)});
  }
  return t;
}

CsvTable pdf_curve_table(const EmpiricalDist& emp, const ScalarLaw& law) {
  CsvTable t{{"sinr_linear", "sinr_db", "pdf_per_unit_sinr"}, {}};
  if (emp.bin_edges.empty()) return t;
  const double lo = emp.bin_edges.front();
  const double hi = emp.bin_edges.back();
  for (std::size_t i = 0; i < kCurvePoints; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(kCurvePoints - 1);
    const double db = x > 0.0 ? 10.0 * std::log10(x)
                              : -std::numeric_limits<double>::infinity();
    const double pdf = law.valid() ? scalar_pdf(law, x)
                                   : std::numeric_limits<double>::quiet_NaN();
    t.rows.push_back({x, db, pdf});
  }
  return t;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return nlohmann::json::parse(in);
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace swipt::cli
