// Copyright 2026 The zetakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "zetakit/linalg.hpp"

namespace zetakit {
namespace {

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cx(d(rng), d(rng));
  return m;
}

// Laplace expansion along the first row.
cx cofactor_det(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  cx sum{};
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    sum += (j % 2 ? -1.0 : 1.0) * m(0, j) * cofactor_det(minor);
  }
  return sum;
}

TEST(Det, IdentityAndTransposition) {
  EXPECT_EQ(det(ComplexMatrix::identity(5)), cx(1.0));
  EXPECT_EQ(det(ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0})), cx(-1.0));
  EXPECT_EQ(det(ComplexMatrix(0, 0)), cx(1.0));
}

TEST(Det, SingularGivesZero) {
  EXPECT_EQ(det(ComplexMatrix(2, 2, {1.0, 2.0, 2.0, 4.0})), cx(0.0));
  EXPECT_EQ(det(ComplexMatrix(3, 3)), cx(0.0));
}

TEST(Det, MatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 5; ++t) {
      const ComplexMatrix m = random_matrix(n, rng);
      EXPECT_LT(relative_deviation(det(m), cofactor_det(m)), 1e-10) << "n=" << n;
    }
}

TEST(Det, EightByEightViaBlockCofactors) {
  // det of block-triangular [[A, C], [0, B]] is det(A) det(B); each 4x4
  // factor comes from the cofactor oracle.
  std::mt19937_64 rng(5);
  const ComplexMatrix a = random_matrix(4, rng), b = random_matrix(4, rng), c = random_matrix(4, rng);
  ComplexMatrix m(8, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      m(i, j) = a(i, j);
      m(i, 4 + j) = c(i, j);
      m(4 + i, 4 + j) = b(i, j);
    }
  // Mix rows so that pivoting is exercised without changing |det|.
  for (std::size_t j = 0; j < 8; ++j) std::swap(m(0, j), m(7, j));
  EXPECT_LT(relative_deviation(det(m), -cofactor_det(a) * cofactor_det(b)), 1e-10);
}

TEST(Kron, IdentityGivesBlockDiagonal) {
  const ComplexMatrix m(2, 2, {1.0, 2.0, 3.0, 4.0});
  const ComplexMatrix k = kron(ComplexMatrix::identity(2), m);
  ASSERT_EQ(k.rows(), 4u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(k(i, j), m(i, j));
      EXPECT_EQ(k(2 + i, 2 + j), m(i, j));
      EXPECT_EQ(k(i, 2 + j), cx(0.0));
    }
}

TEST(Kron, PermutationDeterminant) {
  std::mt19937_64 rng(3);
  // 3-cycle has sign +1; a transposition in S3 has sign -1.
  const ComplexMatrix cyc(3, 3, {0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0});
  const ComplexMatrix swp(3, 3, {0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0});
  const ComplexMatrix m = random_matrix(3, rng);
  const cx dm = det(m);
  EXPECT_LT(relative_deviation(det(kron(cyc, m)), ipow(dm, 3)), 1e-12);
  EXPECT_LT(relative_deviation(det(kron(swp, m)), -ipow(dm, 3)), 1e-12);
  EXPECT_LT(relative_deviation(det(kron(m, swp)), -ipow(dm, 3)), 1e-12);
}

TEST(Poly, Basics) {
  const UnivariatePoly p({1.0, 0.0, -1.0});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(2.0), cx(-3.0));
  EXPECT_EQ(poly_derivative_at(p, 1.0), cx(-2.0));
  EXPECT_EQ(poly_derivative_at(UnivariatePoly({7.0}), 3.0), cx(0.0));
  EXPECT_EQ(UnivariatePoly({1.0, 2.0, 0.0, 0.0}).degree(), 1);
  EXPECT_TRUE(UnivariatePoly({0.0}).is_zero());
}

TEST(Poly, DivisionByLinear) {
  // (1 - u^2) / (u - 1) = -(1 + u), remainder 0.
  const auto [q, r] = divide_by_linear(UnivariatePoly({1.0, 0.0, -1.0}), 1.0);
  EXPECT_EQ(r, cx(0.0));
  EXPECT_EQ(q.coefficients(), (std::vector<cx>{-1.0, -1.0}));
  const auto [q2, r2] = divide_by_linear(UnivariatePoly({2.0, 1.0}), 1.0);
  EXPECT_EQ(r2, cx(3.0));
  EXPECT_EQ(q2.coefficients(), (std::vector<cx>{1.0}));
}

TEST(Poly, Divmod) {
  const UnivariatePoly a({1.0, 2.0, 3.0}), b({-1.0, 1.0, 0.5, 2.0});
  const auto [q, r] = poly_divmod(a * b + UnivariatePoly({4.0, -1.0}), a);
  EXPECT_LT(coefficient_deviation(q, b), 1e-14);
  EXPECT_LT(coefficient_deviation(r, UnivariatePoly({4.0, -1.0})), 1e-14);
}

TEST(Interpolate, ConstantAndQuadratic) {
  const UnivariatePoly c = interpolate_poly([](cx) { return cx(2.5, -1.0); }, 0);
  EXPECT_EQ(c.degree(), 0);
  EXPECT_LT(std::abs(c.coefficient(0) - cx(2.5, -1.0)), 1e-15);
  const UnivariatePoly q = interpolate_poly([](cx u) { return 1.0 - u * u; }, 2);
  EXPECT_LT(coefficient_deviation(q, UnivariatePoly({1.0, 0.0, -1.0})), 1e-15);
}

TEST(Interpolate, GenerousBoundIsHarmless) {
  const UnivariatePoly q = interpolate_poly([](cx u) { return 1.0 - 3.0 * u * u * u; }, 12).trimmed(1e-12);
  EXPECT_EQ(q.degree(), 3);
  EXPECT_LT(coefficient_deviation(q, UnivariatePoly({1.0, 0.0, 0.0, -3.0})), 1e-14);
}

TEST(Interpolate, RejectsLowBound) {
  EXPECT_THROW(interpolate_poly([](cx u) { return ipow(u, 5); }, 3), NumericError);
  EXPECT_THROW(interpolate_poly([](cx u) { return std::exp(u); }, 8), NumericError);
}

TEST(Interpolate, DeterminantOfPolynomialMatrix) {
  std::mt19937_64 rng(9);
  const ComplexMatrix m = random_matrix(5, rng);
  auto f = [&](cx u) { return det(ComplexMatrix::identity(5) - m * u); };
  const UnivariatePoly p = interpolate_poly(f, 5);
  EXPECT_LT(std::abs(p.coefficient(0) - 1.0), 1e-13);
  EXPECT_LT(std::abs(p.coefficient(1) + m.trace()), 1e-12);
  const cx u0(0.3, -0.7);
  EXPECT_LT(relative_deviation(p(u0), f(u0)), 1e-12);
}

TEST(Deviation, Definitions) {
  EXPECT_EQ(relative_deviation(0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(relative_deviation(1.0, 2.0), 0.5);
  EXPECT_TRUE(close(1.0, 1.0 + 1e-12));
  EXPECT_FALSE(close(1.0, 1.001));
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(ComplexMatrix(2, 2) * ComplexMatrix(3, 3), InputError);
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0}), InputError);
}

TEST(Matrix, PowerAndTrace) {
  const ComplexMatrix j(2, 2, {0.0, 1.0, 1.0, 0.0});
  EXPECT_EQ(matrix_power(j, 2), ComplexMatrix::identity(2));
  EXPECT_EQ(matrix_power(j, 0), ComplexMatrix::identity(2));
  EXPECT_EQ(matrix_power(j, 3).trace(), cx(0.0));
}

}  // namespace
}  // namespace zetakit
