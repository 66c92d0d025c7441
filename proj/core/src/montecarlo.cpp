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

#include "swipt/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "swipt/channels.hpp"
#include "swipt/downlink.hpp"
#include "swipt/errors.hpp"
#include "swipt/rng.hpp"

namespace swipt {

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::kUplinkPerfect: return "uplink_perfect";
    case Scenario::kUplinkImperfect: return "uplink_imperfect";
    case Scenario::kDownlinkPerfect: return "downlink_perfect";
    case Scenario::kDownlinkImperfect: return "downlink_imperfect";
  }
  return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (auto s : {Scenario::kUplinkPerfect, Scenario::kUplinkImperfect,
                 Scenario::kDownlinkPerfect, Scenario::kDownlinkImperfect}) {
    if (to_string(s) == key) return s;
  }
  return std::nullopt;
}

bool is_uplink(Scenario s) {
  return s == Scenario::kUplinkPerfect || s == Scenario::kUplinkImperfect;
}

EmpiricalDist EmpiricalDist::from_samples(std::vector<double> samples) {
  EmpiricalDist d;
  std::sort(samples.begin(), samples.end());
  d.samples = std::move(samples);
  if (d.samples.empty()) return d;

  const double lo = d.samples.front();
  const double hi = d.samples.back();
  const double n = static_cast<double>(d.samples.size());
  const double iqr = d.quantile(0.75) - d.quantile(0.25);
  std::size_t bins = 1;
  if (hi > lo && iqr > 0.0) {
    const double width = 2.0 * iqr / std::cbrt(n);
    bins = static_cast<std::size_t>(std::ceil((hi - lo) / width));
    bins = std::clamp<std::size_t>(bins, 1, kMaxBins);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  d.bin_edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    d.bin_edges[i] = lo + span * static_cast<double>(i) / static_cast<double>(bins);
  }
  d.bin_edges.back() = hi > lo ? hi : lo + 1.0;

  std::vector<std::uint64_t> counts(bins, 0);
  for (double x : d.samples) {
    auto b = static_cast<std::size_t>((x - lo) / span * static_cast<double>(bins));
    ++counts[std::min(b, bins - 1)];
  }
  d.bin_mass.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    d.bin_mass[i] = static_cast<double>(counts[i]) / n;
  }
  return d;
}

double EmpiricalDist::mean() const {
  if (samples.empty()) throw std::invalid_argument("EmpiricalDist: empty");
  double acc = 0.0;
  for (double x : samples) acc += x;
  return acc / static_cast<double>(samples.size());
}

double EmpiricalDist::variance() const {
  if (samples.size() < 2) throw std::invalid_argument("EmpiricalDist: need 2 samples");
  const double m = mean();
  double acc = 0.0;
  for (double x : samples) acc += (x - m) * (x - m);
  return acc / static_cast<double>(samples.size() - 1);
}

double EmpiricalDist::quantile(double q) const {
  if (samples.empty()) throw std::invalid_argument("EmpiricalDist: empty");
  const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(samples.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  if (i + 1 >= samples.size()) return samples.back();
  const double t = pos - static_cast<double>(i);
  return samples[i] + t * (samples[i + 1] - samples[i]);
}

double EmpiricalDist::ecdf(double x) const {
  if (samples.empty()) throw std::invalid_argument("EmpiricalDist: empty");
  const auto it = std::upper_bound(samples.begin(), samples.end(), x);
  return static_cast<double>(it - samples.begin()) /
         static_cast<double>(samples.size());
}

namespace {

double reduce(const CMatrix& gamma, Reduction reduction) {
  return reduction == Reduction::kTrace ? trace(gamma).real() : gamma(0, 0).real();
}

struct Sample {
  double value = 0.0;
  double scale = 0.0;
  std::uint64_t resamples = 0;
};

Sample one_realization(const SystemConfig& cfg, Scenario scenario,
                       const RunOptions& opt, std::uint64_t index) {
  Rng rng(cfg.seed, index);
  for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
    const ChannelSet ch = sample_channels(cfg, rng);
    try {
      Sample s;
      s.resamples = static_cast<std::uint64_t>(attempt);
      switch (scenario) {
        case Scenario::kUplinkPerfect:
          s.value = reduce(uplink_sinr_perfect(cfg, ch, opt.user), opt.reduction);
          s.scale = uplink_sinr_scale(cfg, ch, opt.user, Csi::kPerfect);
          break;
        case Scenario::kUplinkImperfect:
          s.value = reduce(uplink_sinr_imperfect(cfg, ch, opt.user), opt.reduction);
          s.scale = uplink_sinr_scale(cfg, ch, opt.user, Csi::kImperfect);
          break;
        case Scenario::kDownlinkPerfect:
          s.value = reduce(downlink_sinr_perfect(cfg, ch, opt.user), opt.reduction);
          break;
        case Scenario::kDownlinkImperfect:
          s.value = reduce(downlink_sinr_imperfect(cfg, ch, opt.user), opt.reduction);
          break;
      }
      return s;
    } catch (const RankDeficient&) {
    } catch (const SingularMatrix&) {
    }
  }
  throw std::runtime_error("realization " + std::to_string(index) +
                           ": degenerate after " + std::to_string(kMaxResamples) +
                           " resamples");
}

}  // namespace

ScenarioRun run_scenario(const SystemConfig& cfg, Scenario scenario,
                         std::uint64_t n, const RunOptions& options) {
  require_valid(cfg);
  if (options.user < 0 || options.user >= cfg.users) {
    throw std::out_of_range("run_scenario: user index out of range");
  }
  if (is_uplink(scenario)) {
    const int need = cfg.su_antennas + (cfg.users - 1) + (cfg.si_gain > 0.0 ? 1 : 0);
    if (need > cfg.selected_antennas) {
      throw std::domain_error("uplink ZF needs N_u + (K - 1) + [si_gain > 0] = " +
                              std::to_string(need) + " <= N_sel = " +
                              std::to_string(cfg.selected_antennas));
    }
  }
  std::vector<Sample> out(n);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.workers,
                                      static_cast<unsigned>(std::max<std::uint64_t>(n, 1))));

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t j = begin; j < end; ++j) {
      out[j] = one_realization(cfg, scenario, options, j);
    }
  };

  if (workers == 1) {
    work(0, n);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(n, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(n, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ScenarioRun run;
  std::vector<double> values(n);
  double scale_sum = 0.0;
  for (std::uint64_t j = 0; j < n; ++j) {
    values[j] = out[j].value;
    scale_sum += out[j].scale;
    run.resamples += out[j].resamples;
  }
  if (n > 0 && is_uplink(scenario)) run.mean_scale = scale_sum / static_cast<double>(n);
  run.dist = EmpiricalDist::from_samples(std::move(values));
  return run;
}

AnalyticalLaw analytical_scalar_law(const SystemConfig& cfg, Scenario scenario,
                                    std::optional<double> mean_scale,
                                    UplinkDof dof) {
  AnalyticalLaw out;
  if (is_uplink(scenario)) {
    const Csi csi = scenario == Scenario::kUplinkPerfect ? Csi::kPerfect : Csi::kImperfect;
    const double scale = mean_scale ? *mean_scale : uplink_unit_beam_scale(cfg, csi);
    const WishartParams w = uplink_wishart_law(cfg, scale, dof);
    out.law = ScalarLaw::gamma(0.5 * w.dof, scale);
    out.wishart = w;
    if (dof == UplinkDof::kFullArray) {
      out.flags.push_back("dof_full_array: dof = 2 N_r ignores the nulled interference directions");
    }
    return out;
  }

  const bool perfect = scenario == Scenario::kDownlinkPerfect;
  const BetaIIParams b = perfect ? beta2_params_perfect(cfg) : beta2_params_imperfect(cfg);
  out.beta2 = b;
  out.law = ScalarLaw::beta_prime(b.n1, b.n2);
  if (!b.normalizable() || !out.law.valid()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "beta2_not_normalizable: N1=" << b.n1 << " N2=" << b.n2
        << " must exceed (N_u-1)/2";
    out.flags.push_back(msg.str());
  }
  if (cfg.su_antennas > 1) {
    out.flags.push_back("scalar_reduction_approximate: beta-prime is exact only for N_u = 1");
  }
  if (!perfect) {
    SystemConfig zero = cfg;
    zero.csi_error = 0.0;
    const auto mp = moment_match_perfect(zero);
    const auto mi = moment_match_imperfect(zero);
    std::ostringstream msg;
    msg.precision(17);
    msg << "ng_vs_ns_factor2: N_g carries 2 N_t where N_s carries N_t; at alpha=0 "
        << "N_g=" << mi.n_g << " vs N_s=" << mp.n_s
        << ", so the imperfect law does not reduce to the perfect one";
    out.flags.push_back(msg.str());
  }
  return out;
}

std::vector<double> sample_analytical(const AnalyticalLaw& law, std::uint64_t n,
                                      Reduction reduction, std::uint64_t seed,
                                      std::uint64_t stream) {
  Rng rng(seed, stream);
  std::vector<double> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (law.wishart) {
      out.push_back(reduce(wishart_sample(*law.wishart, rng), reduction));
    } else if (law.beta2) {
      out.push_back(reduce(beta2_sample(*law.beta2, rng), reduction));
    } else {
      out.push_back(sample_scalar(law.law, rng));
    }
  }
  return out;
}

double ks_statistic(const EmpiricalDist& emp, const ScalarLaw& law) {
  if (emp.empty()) throw std::invalid_argument("ks_statistic: empty distribution");
  const double n = static_cast<double>(emp.size());
  double d = 0.0;
  for (std::size_t i = 0; i < emp.size(); ++i) {
    const double f = scalar_cdf(law, emp.samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return std::clamp(d, 0.0, 1.0);
}

double ks_two_sample(const EmpiricalDist& a, const EmpiricalDist& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty distribution");
  const auto& x = a.samples;
  const auto& y = b.samples;
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= t) ++i;
    while (j < y.size() && y[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

bool ComparisonReport::has_flag(std::string_view code) const {
  for (const auto& f : validity_flags) {
    if (f.compare(0, code.size(), code) == 0 &&
        (f.size() == code.size() || f[code.size()] == ':')) {
      return true;
    }
  }
  return false;
}

namespace {

std::optional<double> rel_err(double empirical, std::optional<double> analytical) {
  if (!analytical || *analytical == 0.0) return std::nullopt;
  return std::abs(empirical - *analytical) / std::abs(*analytical);
}

}  // namespace

ComparisonReport compare(const EmpiricalDist& emp, const ScalarLaw& law,
                         Scenario scenario, std::vector<std::string> flags) {
  if (emp.empty()) throw std::invalid_argument("compare: empty distribution");
  ComparisonReport r;
  r.scenario = scenario;
  r.law = law;
  r.n_samples = emp.size();
  r.validity_flags = std::move(flags);
  r.empirical_mean = emp.mean();
  r.empirical_variance = emp.size() > 1 ? emp.variance() : 0.0;
  if (law.valid()) {
    r.ks_distance = ks_statistic(emp, law);
    r.analytical_mean = law.mean();
    r.analytical_variance = law.variance();
  } else {
    r.validity_flags.push_back("law_invalid: KS not computed");
  }
  if (law.valid() && !r.analytical_mean) {
    r.validity_flags.push_back("mean_undefined: beta-prime mean needs N2 > 1");
  }
  if (law.valid() && !r.analytical_variance) {
    r.validity_flags.push_back("variance_undefined: beta-prime variance needs N2 > 2");
  }
  r.mean_rel_err = rel_err(r.empirical_mean, r.analytical_mean);
  r.var_rel_err = rel_err(r.empirical_variance, r.analytical_variance);
  if (r.n_samples < kLowSampleThreshold) {
    r.validity_flags.push_back("low_sample: fewer than " +
                               std::to_string(kLowSampleThreshold) + " samples");
  }
  return r;
}

ComparisonReport score_run(const SystemConfig& cfg, Scenario scenario,
                           const ScenarioRun& run, Reduction reduction,
                           UplinkDof dof) {
  std::optional<double> scale;
  if (is_uplink(scenario) && !run.dist.empty()) scale = run.mean_scale;
  AnalyticalLaw law = analytical_scalar_law(cfg, scenario, scale, dof);
  if (reduction == Reduction::kFirstStream) {
    return compare(run.dist, law.law, scenario, law.flags);
  }

  // Trace statistics: compare against draws of the matrix law itself.
  ComparisonReport r = compare(run.dist, law.law, scenario, law.flags);
  const auto reference = EmpiricalDist::from_samples(
      sample_analytical(law, run.dist.size(), reduction, cfg.seed, 1ULL << 63));
  r.ks_mode = "two_sample_trace";
  r.ks_distance = ks_two_sample(run.dist, reference);
  r.analytical_mean = reference.mean();
  r.analytical_variance = reference.size() > 1 ? reference.variance() : 0.0;
  r.mean_rel_err = rel_err(r.empirical_mean, r.analytical_mean);
  r.var_rel_err = rel_err(r.empirical_variance, r.analytical_variance);
  return r;
}

namespace {

nlohmann::json opt_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> json_opt(const nlohmann::json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

}  // namespace

nlohmann::json report_to_json(const ComparisonReport& r) {
  return {
      {"scenario", to_string(r.scenario)},
      {"law", {{"kind", to_string(r.law.kind)}, {"a", r.law.a}, {"b", r.law.b}}},
      {"ks_mode", r.ks_mode},
      {"ks_distance", r.ks_distance},
      {"n_samples", r.n_samples},
      {"empirical_mean", r.empirical_mean},
      {"empirical_variance", r.empirical_variance},
      {"analytical_mean", opt_json(r.analytical_mean)},
      {"analytical_variance", opt_json(r.analytical_variance)},
      {"mean_rel_err", opt_json(r.mean_rel_err)},
      {"var_rel_err", opt_json(r.var_rel_err)},
      {"validity_flags", r.validity_flags},
  };
}

ComparisonReport report_from_json(const nlohmann::json& doc) {
  ComparisonReport r;
  const auto scenario = parse_scenario(doc.at("scenario").get<std::string>());
  if (!scenario) throw std::invalid_argument("report_from_json: unknown scenario");
  r.scenario = *scenario;
  const auto& law = doc.at("law");
  r.law.kind = law.at("kind").get<std::string>() == "gamma"
                   ? ScalarLaw::Kind::kGammaOfWishart
                   : ScalarLaw::Kind::kBetaPrime;
  r.law.a = law.at("a").get<double>();
  r.law.b = law.at("b").get<double>();
  r.ks_mode = doc.at("ks_mode").get<std::string>();
  r.ks_distance = doc.at("ks_distance").get<double>();
  r.n_samples = doc.at("n_samples").get<std::uint64_t>();
  r.empirical_mean = doc.at("empirical_mean").get<double>();
  r.empirical_variance = doc.at("empirical_variance").get<double>();
  r.analytical_mean = json_opt(doc.at("analytical_mean"));
  r.analytical_variance = json_opt(doc.at("analytical_variance"));
  r.mean_rel_err = json_opt(doc.at("mean_rel_err"));
  r.var_rel_err = json_opt(doc.at("var_rel_err"));
  r.validity_flags = doc.at("validity_flags").get<std::vector<std::string>>();
  return r;
}

}  // namespace swipt
