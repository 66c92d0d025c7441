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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "swipt/errors.hpp"
#include "swipt/matrix.hpp"
#include "swipt/rng.hpp"

namespace swipt {
namespace {

CMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.complex_normal();
  }
  return m;
}

oracle::Dense to_dense(const CMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<cplx>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  }
  return d;
}

CMatrix random_pd(std::size_t n, Rng& rng) {
  const CMatrix g = random_matrix(n + 3, n, rng);
  return hermitian_part(matmul(conj_transpose(g), g));
}

TEST(CMatrixTest, RejectsEmptyShapes) {
  EXPECT_THROW(CMatrix(0, 3), DimensionMismatch);
  EXPECT_THROW(CMatrix(2, 2, {1.0, 2.0, 3.0}), DimensionMismatch);
}

TEST(CMatrixTest, RowMajorConstruction) {
  const CMatrix m(2, 3, {1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  EXPECT_EQ(m(0, 2), cplx(3.0));
  EXPECT_EQ(m(1, 0), cplx(4.0));
  EXPECT_EQ(m.entries().size(), 6u);
  EXPECT_EQ(m.entries()[4], cplx(5.0));
}

TEST(MatmulTest, MatchesTripleLoop) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_matrix(4, 6, rng);
    const CMatrix b = random_matrix(6, 3, rng);
    const auto ref = oracle::triple_loop_product(to_dense(a), to_dense(b));
    const CMatrix c = matmul(a, b);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_NEAR(std::abs(c(i, j) - ref[i][j]), 0.0, 1e-12);
      }
    }
  }
}

TEST(MatmulTest, ShapeMismatchThrows) {
  EXPECT_THROW(matmul(CMatrix(2, 3), CMatrix(2, 3)), DimensionMismatch);
}

TEST(ConjTransposeTest, Involution) {
  Rng rng(3);
  const CMatrix a = random_matrix(3, 5, rng);
  EXPECT_EQ(conj_transpose(conj_transpose(a)), a);
  EXPECT_EQ(conj_transpose(a)(4, 1), std::conj(a(1, 4)));
}

TEST(InvertTest, ProductIsIdentity) {
  Rng rng(5);
  const CMatrix a = random_matrix(6, 6, rng);
  EXPECT_LT(max_abs_diff(matmul(a, invert(a)), CMatrix::identity(6)), 1e-10);
}

TEST(InvertTest, IllConditionedThrows) {
  CMatrix a = CMatrix::identity(3);
  a(2, 2) = 1e-14;
  EXPECT_THROW(invert(a), SingularMatrix);
  EXPECT_THROW(invert(CMatrix(2, 3)), DimensionMismatch);
}

TEST(TraceTest, SumOfDiagonal) {
  const CMatrix m(2, 2, {cplx(1, 2), 5.0, 7.0, cplx(3, -1)});
  EXPECT_EQ(trace(m), cplx(4, 1));
}

TEST(DeterminantTest, MatchesHandLu) {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = random_pd(5, rng);
    const double ref = oracle::lu_determinant(to_dense(a)).real();
    EXPECT_NEAR(det_hermitian_psd(a) / ref, 1.0, 1e-10);
    EXPECT_NEAR(log_det_hermitian_psd(a), std::log(ref), 1e-10);
  }
}

TEST(DeterminantTest, SingularAndIndefinite) {
  const double diag0[] = {1.0, 0.0};
  EXPECT_EQ(det_hermitian_psd(CMatrix::diagonal(diag0)), 0.0);
  EXPECT_TRUE(std::isinf(log_det_hermitian_psd(CMatrix::diagonal(diag0))));
  const double diag1[] = {1.0, -0.5};
  EXPECT_THROW(det_hermitian_psd(CMatrix::diagonal(diag1)), Indefinite);
  EXPECT_THROW(det_hermitian_psd(CMatrix(2, 2, {1.0, 2.0, 0.0, 1.0})), NotHermitian);
}

TEST(PsdSqrtTest, SquaresBack) {
  Rng rng(9);
  const CMatrix a = random_pd(4, rng);
  const CMatrix r = psd_sqrt(a);
  EXPECT_TRUE(is_hermitian(r));
  EXPECT_LT(max_abs_diff(matmul(r, r), a), 1e-10 * frobenius_norm(a));
  const CMatrix ir = psd_inv_sqrt(a);
  EXPECT_LT(max_abs_diff(matmul(matmul(ir, a), ir), CMatrix::identity(4)), 1e-9);
}

TEST(PsdSqrtTest, InverseOfSingularThrows) {
  const double d[] = {1.0, 0.0};
  EXPECT_THROW(psd_inv_sqrt(CMatrix::diagonal(d)), SingularMatrix);
}

TEST(OrthonormalBasisTest, DropsDependentColumns) {
  Rng rng(12);
  const CMatrix a = random_matrix(6, 2, rng);
  const CMatrix b = hconcat(a, a.column(0) * cplx(2.0, -1.0));
  const auto q = orthonormal_basis(b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->cols(), 2u);
  EXPECT_LT(max_abs_diff(matmul(conj_transpose(*q), *q), CMatrix::identity(2)), 1e-12);
  EXPECT_FALSE(orthonormal_basis(CMatrix(3, 1)).has_value());
}

TEST(OrthonormalComplementTest, CompletesTheSpace) {
  Rng rng(13);
  const auto q = orthonormal_basis(random_matrix(7, 3, rng));
  const auto c = orthonormal_complement(*q);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->cols(), 4u);
  EXPECT_LT(frobenius_norm(matmul(conj_transpose(*q), *c)), 1e-12);
  EXPECT_FALSE(orthonormal_complement(CMatrix::identity(3)).has_value());
}

TEST(ProjectionTest, IdempotentHermitianAndAnnihilating) {
  Rng rng(14);
  const CMatrix a = random_matrix(6, 2, rng);
  const CMatrix p = orthonormal_projection_complement(a);
  EXPECT_TRUE(is_hermitian(p, 1e-12));
  EXPECT_LT(max_abs_diff(matmul(p, p), p), 1e-12);
  EXPECT_LT(frobenius_norm(matmul(p, a)), 1e-12);
  EXPECT_NEAR(trace(p).real(), 4.0, 1e-12);
  EXPECT_LT(frobenius_norm(orthonormal_projection_complement(CMatrix::identity(3))),
            1e-12);
}

TEST(ProjectionTest, RankDeficientThrows) {
  Rng rng(15);
  const CMatrix a = random_matrix(5, 1, rng);
  EXPECT_THROW(orthonormal_projection_complement(hconcat(a, a)), RankDeficient);
}

TEST(HermitianTest, EigenvaluesAscending) {
  const double d[] = {3.0, 1.0, 2.0};
  const auto ev = hermitian_eigenvalues(CMatrix::diagonal(d));
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_DOUBLE_EQ(ev[0], 1.0);
  EXPECT_DOUBLE_EQ(ev[2], 3.0);
}

}  // namespace
}  // namespace swipt
