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

#include "swipt/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

std::string shape(const CMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const CMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(op) + ": matrix is " + shape(a) +
                            ", expected square");
  }
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hermitian_solve(
    const CMatrix& a, const char* op) {
  require_square(a, op);
  if (!is_hermitian(a)) {
    throw NotHermitian(std::string(op) + ": input is not Hermitian");
  }
  Eigen::MatrixXcd h = 0.5 * (a.eigen() + a.eigen().adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h);
}

// Clamps PSD eigenvalues in place; throws Indefinite on a genuinely negative
// one.
void clamp_psd(Eigen::VectorXd& lambda, const char* op) {
  const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
  const double tol = 1e-10 * scale;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -tol) {
      throw Indefinite(std::string(op) + ": eigenvalue " +
                       std::to_string(lambda(i)) + " below zero");
    }
    lambda(i) = std::max(lambda(i), 0.0);
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("CMatrix: rows and cols must be >= 1");
  }
  m_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                              static_cast<Eigen::Index>(cols));
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols,
                 std::vector<cplx> row_major)
    : CMatrix(rows, cols) {
  if (row_major.size() != rows * cols) {
    throw DimensionMismatch("CMatrix: " + std::to_string(row_major.size()) +
                            " entries for a " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " matrix");
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m_(i, j) = row_major[i * cols + j];
    }
  }
}

CMatrix::CMatrix(Eigen::MatrixXcd values) : m_(std::move(values)) {
  if (m_.rows() == 0 || m_.cols() == 0) {
    throw DimensionMismatch("CMatrix: rows and cols must be >= 1");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  return CMatrix(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n)));
}

CMatrix CMatrix::zeros(std::size_t rows, std::size_t cols) {
  return CMatrix(rows, cols);
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
  CMatrix d(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

std::vector<cplx> CMatrix::entries() const {
  std::vector<cplx> out;
  out.reserve(rows() * cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out.push_back(m_(i, j));
  }
  return out;
}

CMatrix CMatrix::column(std::size_t j) const {
  return block(0, j, rows(), 1);
}

CMatrix CMatrix::block(std::size_t row, std::size_t col, std::size_t nrows,
                       std::size_t ncols) const {
  if (row + nrows > rows() || col + ncols > cols()) {
    throw DimensionMismatch("block: out of range of " + shape(*this));
  }
  return CMatrix(Eigen::MatrixXcd(m_.block(row, col, nrows, ncols)));
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (rows() != other.rows() || cols() != other.cols()) {
    throw DimensionMismatch("add: " + shape(*this) + " vs " + shape(other));
  }
  m_ += other.m_;
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (rows() != other.rows() || cols() != other.cols()) {
    throw DimensionMismatch("sub: " + shape(*this) + " vs " + shape(other));
  }
  m_ -= other.m_;
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  m_ *= s;
  return *this;
}

bool CMatrix::operator==(const CMatrix& other) const {
  return rows() == other.rows() && cols() == other.cols() && m_ == other.m_;
}

CMatrix conj_transpose(const CMatrix& a) {
  return CMatrix(Eigen::MatrixXcd(a.eigen().adjoint()));
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + shape(a) + " * " + shape(b));
  }
  return CMatrix(Eigen::MatrixXcd(a.eigen() * b.eigen()));
}

CMatrix invert(const CMatrix& a) {
  require_square(a, "invert");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.eigen());
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0) || smax / smin > kMaxConditionNumber) {
    throw SingularMatrix("invert: condition number " +
                         std::to_string(smin > 0.0 ? smax / smin
                                                   : std::numeric_limits<double>::infinity()) +
                         " exceeds threshold");
  }
  return CMatrix(Eigen::MatrixXcd(a.eigen().partialPivLu().inverse()));
}

cplx trace(const CMatrix& a) {
  require_square(a, "trace");
  return a.eigen().trace();
}

double frobenius_norm(const CMatrix& a) { return a.eigen().norm(); }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_abs_diff: " + shape(a) + " vs " + shape(b));
  }
  return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& a, double tol) {
  if (!a.is_square()) return false;
  const double scale = std::max(1.0, a.eigen().cwiseAbs().maxCoeff());
  return (a.eigen() - a.eigen().adjoint()).cwiseAbs().maxCoeff() <=
         tol * scale;
}

CMatrix hermitian_part(const CMatrix& a) {
  require_square(a, "hermitian_part");
  return CMatrix(Eigen::MatrixXcd(0.5 * (a.eigen() + a.eigen().adjoint())));
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
  auto es = hermitian_solve(a, "hermitian_eigenvalues");
  const auto& l = es.eigenvalues();
  return {l.data(), l.data() + l.size()};
}

double log_det_hermitian_psd(const CMatrix& a) {
  auto es = hermitian_solve(a, "det_hermitian_psd");
  Eigen::VectorXd lambda = es.eigenvalues();
  clamp_psd(lambda, "det_hermitian_psd");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) == 0.0) return -std::numeric_limits<double>::infinity();
    acc += std::log(lambda(i));
  }
  return acc;
}

double det_hermitian_psd(const CMatrix& a) {
  return std::exp(log_det_hermitian_psd(a));
}

CMatrix psd_sqrt(const CMatrix& a) {
  auto es = hermitian_solve(a, "psd_sqrt");
  Eigen::VectorXd lambda = es.eigenvalues();
  clamp_psd(lambda, "psd_sqrt");
  const auto& v = es.eigenvectors();
  Eigen::MatrixXcd r =
      v * lambda.cwiseSqrt().cast<cplx>().asDiagonal() * v.adjoint();
  return CMatrix(Eigen::MatrixXcd(0.5 * (r + r.adjoint())));
}

CMatrix psd_inv_sqrt(const CMatrix& a) {
  auto es = hermitian_solve(a, "psd_inv_sqrt");
  Eigen::VectorXd lambda = es.eigenvalues();
  clamp_psd(lambda, "psd_inv_sqrt");
  const double lmax = lambda.maxCoeff();
  const double lmin = lambda.minCoeff();
  if (!(lmin > 0.0) || lmax / lmin > kMaxConditionNumber) {
    throw SingularMatrix("psd_inv_sqrt: matrix is singular");
  }
  const auto& v = es.eigenvectors();
  Eigen::VectorXd inv = lambda.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXcd r = v * inv.cast<cplx>().asDiagonal() * v.adjoint();
  return CMatrix(Eigen::MatrixXcd(0.5 * (r + r.adjoint())));
}

std::optional<CMatrix> orthonormal_basis(const CMatrix& a, double rank_tol) {
  const Eigen::Index n = a.eigen().rows();
  std::vector<Eigen::VectorXcd> kept;
  for (Eigen::Index j = 0; j < a.eigen().cols(); ++j) {
    Eigen::VectorXcd v = a.eigen().col(j);
    const double original = v.norm();
    if (original == 0.0) continue;
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : kept) v -= q.dot(v) * q;
    }
    const double residual = v.norm();
    if (residual > rank_tol * original) kept.push_back(v / residual);
  }
  if (kept.empty()) return std::nullopt;
  Eigen::MatrixXcd q(n, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    q.col(static_cast<Eigen::Index>(j)) = kept[j];
  }
  return CMatrix(std::move(q));
}

std::optional<CMatrix> orthonormal_complement(const CMatrix& q) {
  const std::size_t n = q.rows();
  if (q.cols() >= n) return std::nullopt;
  Eigen::MatrixXcd candidates(n, q.cols() + n);
  candidates << q.eigen(), Eigen::MatrixXcd::Identity(n, n);
  auto full = orthonormal_basis(CMatrix(std::move(candidates)), 1e-8);
  if (!full || full->cols() <= q.cols()) return std::nullopt;
  return full->block(0, q.cols(), n, full->cols() - q.cols());
}

CMatrix orthonormal_projection_complement(const CMatrix& a) {
  auto q = orthonormal_basis(a);
  if (!q || q->cols() != a.cols()) {
    throw RankDeficient("orthonormal_projection_complement: input " +
                        shape(a) + " is not of full column rank");
  }
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(a.rows(), a.rows()) -
                       q->eigen() * q->eigen().adjoint();
  return CMatrix(Eigen::MatrixXcd(0.5 * (p + p.adjoint())));
}

CMatrix hconcat(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("hconcat: " + shape(a) + " | " + shape(b));
  }
  Eigen::MatrixXcd m(a.rows(), a.cols() + b.cols());
  m << a.eigen(), b.eigen();
  return CMatrix(std::move(m));
}

}  // namespace swipt
