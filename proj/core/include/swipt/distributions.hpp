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

#include "swipt/matrix.hpp"
#include "swipt/rng.hpp"

namespace swipt {

// Central Wishart law in the real-dof convention: dof is n, twice the number
// of complex Gaussian rows. scale is the matrix Sigma with E[X] = dof * scale / 2.
// The density is evaluated with the displayed real-Wishart normaliser and
// covariance argument scale / 2, which makes the dim-1 case Gamma(n/2, scale).
struct WishartParams {
  int dim = 1;
  double dof = 2.0;
  CMatrix scale = CMatrix::identity(1);

  bool operator==(const WishartParams&) const = default;
};

// Matrix-variate beta type II (beta-prime in dim 1).
struct BetaIIParams {
  double n1 = 1.0;
  double n2 = 1.0;
  int dim = 1;

  // n1, n2 > (dim - 1) / 2.
  bool normalizable() const;
  bool operator==(const BetaIIParams&) const = default;
};

// log Gamma_p(x) = p(p-1)/4 log(pi) + sum_{i=1..p} log Gamma(x - (i-1)/2).
// Throws InvalidParameters unless x > (p - 1) / 2.
double log_multivariate_gamma(int p, double x);

// Throws InvalidParameters when dof <= dim - 1 or the scale is singular,
// Indefinite / NotHermitian for a non-PD argument, DimensionMismatch on size.
double wishart_logpdf(const CMatrix& x, const WishartParams& params);

// Sigma^{1/2} G^H G Sigma^{1/2} with G of dof/2 rows of CN(0, 1) entries
// when dof/2 is an integer; complex Bartlett factor otherwise.
CMatrix wishart_sample(const WishartParams& params, Rng& rng);

// det(x)^{(2 n1 - p - 1)/2} det(I + x)^{-(n1 + n2)} / B_p(n1, n2).
double beta2_logpdf(const CMatrix& x, const BetaIIParams& params);

// Psi^{-1/2} Phi Psi^{-1/2} for independent unit-scale Wisharts of real dof
// 2 n1 and 2 n2. Exact beta-prime in dim 1.
CMatrix beta2_sample(const BetaIIParams& params, Rng& rng);

// Scalar reductions used for the KS comparisons.
struct ScalarLaw {
  enum class Kind { kGammaOfWishart, kBetaPrime };

  Kind kind = Kind::kGammaOfWishart;
  double a = 1.0;  // gamma shape, or beta-prime n1
  double b = 1.0;  // gamma scale, or beta-prime n2

  static ScalarLaw gamma(double shape, double scale) {
    return {Kind::kGammaOfWishart, shape, scale};
  }
  static ScalarLaw beta_prime(double n1, double n2) {
    return {Kind::kBetaPrime, n1, n2};
  }
  // dim-1 reduction: Gamma(dof / 2, scale).
  static ScalarLaw from_wishart(const WishartParams& params);

  bool valid() const { return a > 0.0 && b > 0.0; }
  // nullopt when the moment does not exist (beta-prime needs n2 > 1, n2 > 2).
  std::optional<double> mean() const;
  std::optional<double> variance() const;

  bool operator==(const ScalarLaw&) const = default;
};

const char* to_string(ScalarLaw::Kind kind);

// Throws InvalidParameters for invalid laws; x < 0 gives 0.
double scalar_cdf(const ScalarLaw& law, double x);
double scalar_logpdf(const ScalarLaw& law, double x);
double scalar_pdf(const ScalarLaw& law, double x);

// Marsaglia-Tsang; shape < 1 via the U^{1/shape} boost.
double sample_gamma(double shape, Rng& rng);
double sample_scalar(const ScalarLaw& law, Rng& rng);

}  // namespace swipt
