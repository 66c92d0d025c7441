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

#include "swipt/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

void check_square(const CMatrix& x, int dim, const char* who) {
  if (!x.is_square() || static_cast<int>(x.rows()) != dim) {
    throw DimensionMismatch(std::string(who) + ": argument is " +
                            std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + ", expected dim " +
                            std::to_string(dim));
  }
}

// log det of a Hermitian matrix that must be strictly positive definite.
double log_det_pd(const CMatrix& x, const char* who) {
  const double ld = log_det_hermitian_psd(hermitian_part(x));
  if (!std::isfinite(ld)) {
    throw Indefinite(std::string(who) + ": argument is singular");
  }
  return ld;
}

constexpr double kLn2 = std::numbers::ln2;

}  // namespace

bool BetaIIParams::normalizable() const {
  const double bound = 0.5 * (dim - 1);
  return dim >= 1 && n1 > bound && n2 > bound;
}

double log_multivariate_gamma(int p, double x) {
  if (p < 1) throw InvalidParameters("log_multivariate_gamma: p must be >= 1");
  if (!(x > 0.5 * (p - 1))) {
    throw InvalidParameters("log_multivariate_gamma: x=" + std::to_string(x) +
                            " at or below the pole bound (p-1)/2");
  }
  double acc = 0.25 * p * (p - 1) * std::log(std::numbers::pi);
  for (int i = 1; i <= p; ++i) acc += std::lgamma(x - 0.5 * (i - 1));
  return acc;
}

double wishart_logpdf(const CMatrix& x, const WishartParams& params) {
  const int p = params.dim;
  const double n = params.dof;
  check_square(x, p, "wishart_logpdf");
  check_square(params.scale, p, "wishart_logpdf scale");
  if (!(n > p - 1)) {
    throw InvalidParameters("wishart_logpdf: dof must exceed dim - 1");
  }
  if (!is_hermitian(x)) throw NotHermitian("wishart_logpdf: argument not Hermitian");

  const CMatrix sigma = hermitian_part(params.scale) * cplx(0.5);
  const double log_det_sigma = log_det_hermitian_psd(sigma);
  if (!std::isfinite(log_det_sigma)) {
    throw InvalidParameters("wishart_logpdf: singular scale");
  }
  const double log_det_x = log_det_pd(x, "wishart_logpdf");
  const double tr = trace(matmul(invert(sigma), x)).real();

  return 0.5 * (n - p - 1) * log_det_x - 0.5 * tr - 0.5 * n * p * kLn2 -
         log_multivariate_gamma(p, 0.5 * n) - 0.5 * n * log_det_sigma;
}

CMatrix wishart_sample(const WishartParams& params, Rng& rng) {
  const auto p = static_cast<std::size_t>(params.dim);
  const double half = 0.5 * params.dof;
  if (!(half > params.dim - 1)) {
    throw InvalidParameters("wishart_sample: dof must exceed 2 (dim - 1)");
  }
  const CMatrix root = psd_sqrt(hermitian_part(params.scale));

  CMatrix core(p, p);
  if (half == std::floor(half)) {
    const auto rows = static_cast<std::size_t>(half);
    CMatrix g(rows, p);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < p; ++j) g(i, j) = rng.complex_normal();
    }
    core = matmul(conj_transpose(g), g);
  } else {
    CMatrix l(p, p);
    for (std::size_t i = 0; i < p; ++i) {
      l(i, i) = std::sqrt(sample_gamma(half - static_cast<double>(i), rng));
      for (std::size_t j = 0; j < i; ++j) l(i, j) = rng.complex_normal();
    }
    core = matmul(l, conj_transpose(l));
  }
  return hermitian_part(matmul(matmul(root, core), root));
}

double beta2_logpdf(const CMatrix& x, const BetaIIParams& params) {
  const int p = params.dim;
  check_square(x, p, "beta2_logpdf");
  if (!params.normalizable()) {
    throw InvalidParameters("beta2_logpdf: n1, n2 must exceed (dim - 1) / 2");
  }
  if (!is_hermitian(x)) throw NotHermitian("beta2_logpdf: argument not Hermitian");

  const double log_det_x = log_det_pd(x, "beta2_logpdf");
  const CMatrix shifted =
      hermitian_part(x) + CMatrix::identity(static_cast<std::size_t>(p));
  const double log_det_shift = log_det_pd(shifted, "beta2_logpdf");
  const double log_beta = log_multivariate_gamma(p, params.n1) +
                          log_multivariate_gamma(p, params.n2) -
                          log_multivariate_gamma(p, params.n1 + params.n2);
  return 0.5 * (2.0 * params.n1 - p - 1) * log_det_x -
         (params.n1 + params.n2) * log_det_shift - log_beta;
}

CMatrix beta2_sample(const BetaIIParams& params, Rng& rng) {
  if (!params.normalizable()) {
    throw InvalidParameters("beta2_sample: n1, n2 must exceed (dim - 1) / 2");
  }
  const auto p = static_cast<std::size_t>(params.dim);
  if (p == 1) {
    const double v = sample_gamma(params.n1, rng) / sample_gamma(params.n2, rng);
    return CMatrix::scalar(v);
  }
  const CMatrix id = CMatrix::identity(p);
  const CMatrix phi = wishart_sample({params.dim, 2.0 * params.n1, id}, rng);
  const CMatrix psi = wishart_sample({params.dim, 2.0 * params.n2, id}, rng);
  const CMatrix r = psd_inv_sqrt(psi);
  return hermitian_part(matmul(matmul(r, phi), r));
}

ScalarLaw ScalarLaw::from_wishart(const WishartParams& params) {
  if (params.dim != 1) {
    throw DimensionMismatch("ScalarLaw::from_wishart: dim must be 1");
  }
  return gamma(0.5 * params.dof, params.scale(0, 0).real());
}

std::optional<double> ScalarLaw::mean() const {
  if (kind == Kind::kGammaOfWishart) return a * b;
  if (b <= 1.0) return std::nullopt;
  return a / (b - 1.0);
}

std::optional<double> ScalarLaw::variance() const {
  if (kind == Kind::kGammaOfWishart) return a * b * b;
  if (b <= 2.0) return std::nullopt;
  return a * (a + b - 1.0) / ((b - 2.0) * (b - 1.0) * (b - 1.0));
}

const char* to_string(ScalarLaw::Kind kind) {
  return kind == ScalarLaw::Kind::kGammaOfWishart ? "gamma" : "beta_prime";
}

double scalar_cdf(const ScalarLaw& law, double x) {
  if (!law.valid()) throw InvalidParameters("scalar_cdf: invalid law parameters");
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (law.kind == ScalarLaw::Kind::kGammaOfWishart) {
    return boost::math::gamma_p(law.a, x / law.b);
  }
  return boost::math::ibeta(law.a, law.b, x / (1.0 + x));
}

double scalar_logpdf(const ScalarLaw& law, double x) {
  if (!law.valid()) throw InvalidParameters("scalar_logpdf: invalid law parameters");
  if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
  if (law.kind == ScalarLaw::Kind::kGammaOfWishart) {
    return (law.a - 1.0) * std::log(x) - x / law.b - std::lgamma(law.a) -
           law.a * std::log(law.b);
  }
  const double log_beta =
      std::lgamma(law.a) + std::lgamma(law.b) - std::lgamma(law.a + law.b);
  return (law.a - 1.0) * std::log(x) - (law.a + law.b) * std::log1p(x) - log_beta;
}

double scalar_pdf(const ScalarLaw& law, double x) {
  return std::exp(scalar_logpdf(law, x));
}

double sample_gamma(double shape, Rng& rng) {
  if (!(shape > 0.0)) throw InvalidParameters("sample_gamma: shape must be > 0");
  if (shape < 1.0) {
    const double g = sample_gamma(shape + 1.0, rng);
    return g * std::pow(rng.uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double z;
    double v;
    do {
      z = rng.normal();
      v = 1.0 + c * z;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
    if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_scalar(const ScalarLaw& law, Rng& rng) {
  if (!law.valid()) throw InvalidParameters("sample_scalar: invalid law parameters");
  if (law.kind == ScalarLaw::Kind::kGammaOfWishart) {
    return law.b * sample_gamma(law.a, rng);
  }
  return sample_gamma(law.a, rng) / sample_gamma(law.b, rng);
}

}  // namespace swipt
