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

// Dense complex matrix kernel. Only what the SINR formulas need: Hermitian
// transpose, products, inversion, trace, PSD determinant and square root,
// and projections onto orthogonal complements.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace swipt {

using cplx = std::complex<double>;

// Inversion is refused when sigma_max / sigma_min exceeds this.
inline constexpr double kMaxConditionNumber = 1e12;

class CMatrix {
 public:
  // Zero matrix; rows and cols must both be >= 1.
  CMatrix(std::size_t rows, std::size_t cols);
  // Row-major entries; entries.size() must equal rows * cols.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major);
  explicit CMatrix(Eigen::MatrixXcd values);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols);
  static CMatrix diagonal(std::span<const double> diag);
  static CMatrix scalar(cplx value) { return CMatrix(1, 1, {value}); }

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
  bool is_square() const { return m_.rows() == m_.cols(); }

  cplx operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  cplx& operator()(std::size_t i, std::size_t j) { return m_(i, j); }

  std::vector<cplx> entries() const;

  CMatrix column(std::size_t j) const;
  CMatrix block(std::size_t row, std::size_t col, std::size_t rows,
                std::size_t cols) const;

  const Eigen::MatrixXcd& eigen() const { return m_; }

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

  bool operator==(const CMatrix& other) const;

 private:
  Eigen::MatrixXcd m_;
};

CMatrix conj_transpose(const CMatrix& a);

// Throws DimensionMismatch unless a.cols() == b.rows().
CMatrix matmul(const CMatrix& a, const CMatrix& b);

// Throws SingularMatrix when the condition number exceeds kMaxConditionNumber.
CMatrix invert(const CMatrix& a);

cplx trace(const CMatrix& a);

double frobenius_norm(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Relative Hermitian check: max|a - a^H| <= tol * max(1, max|a|).
bool is_hermitian(const CMatrix& a, double tol = 1e-9);

// (a + a^H) / 2. Used to remove rounding asymmetry before eigen-solves.
CMatrix hermitian_part(const CMatrix& a);

// Ascending eigenvalues of a Hermitian matrix. Throws NotHermitian.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

// Product of the eigenvalues of a Hermitian PSD matrix. Eigenvalues in
// [-tol * max|lambda|, 0) are clamped to zero; anything more negative throws
// Indefinite.
double det_hermitian_psd(const CMatrix& a);
// log of the above; -inf for singular PSD input.
double log_det_hermitian_psd(const CMatrix& a);

// Hermitian PSD square root (eigen-decomposition).
CMatrix psd_sqrt(const CMatrix& a);
// Inverse of the PSD square root. Throws SingularMatrix for singular input.
CMatrix psd_inv_sqrt(const CMatrix& a);

// Orthonormal basis of span(columns of a), built by modified Gram-Schmidt
// with re-orthogonalisation. Columns whose residual falls below
// rank_tol * (their original norm) are dropped, so the result may have
// fewer columns than a; std::nullopt when nothing survives.
std::optional<CMatrix> orthonormal_basis(const CMatrix& a,
                                         double rank_tol = 1e-10);

// Orthonormal basis of the orthogonal complement of span(q), q having
// orthonormal columns. std::nullopt when q spans the full space.
std::optional<CMatrix> orthonormal_complement(const CMatrix& q);

// P = I - Q Q^H with Q the orthonormalised columns of a. Throws
// RankDeficient when a does not have full column rank.
CMatrix orthonormal_projection_complement(const CMatrix& a);

// [a b] column concatenation. Throws DimensionMismatch on row mismatch.
CMatrix hconcat(const CMatrix& a, const CMatrix& b);

}  // namespace swipt
