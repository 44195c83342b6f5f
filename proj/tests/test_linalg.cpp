#include "tpoly/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tpoly/matrix.hpp"

using namespace tpoly;

namespace {

Rational Q(long n, long d = 1) { return Rational(n) / d; }

// The 6x9 constraint matrix of 3x3 classical transportation polytopes,
// column sums first, then row sums.
Matrix a33() {
  return Matrix{{1, 0, 0, 1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 1, 0},
                {0, 0, 1, 0, 0, 1, 0, 0, 1}, {1, 1, 1, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 1, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 1, 1}};
}

TEST(Rank, A33HasRankFive) { EXPECT_EQ(rank(a33()), 5u); }

TEST(Rank, ZeroMatrix) { EXPECT_EQ(rank(Matrix(3, 3)), 0u); }

TEST(Rank, Identity4) { EXPECT_EQ(rank(Matrix::identity(4)), 4u); }

TEST(Kernel, TwoByThreeTransportMatrix) {
  // 4x6 full-row-rank matrix of 2x3 transportation polytopes (row sums
  // first, then the first two column sums).
  Matrix a{{1, 1, 1, 0, 0, 0},
           {0, 0, 0, 1, 1, 1},
           {1, 0, 0, 1, 0, 0},
           {0, 1, 0, 0, 1, 0}};
  Matrix k = kernel_basis(a);
  ASSERT_EQ(k.cols(), 2u);
  ASSERT_EQ(k.rows(), 6u);
  // Row space of the transposed kernel must equal the row space of
  // B = [[1,-1,0,-1,1,0],[1,0,-1,-1,0,1]]: check mutual containment by
  // rank of stacked matrices.
  Matrix b{{1, -1, 0, -1, 1, 0}, {1, 0, -1, -1, 0, 1}};
  Matrix stacked(4, 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 6; ++j) {
      stacked(i, j) = k(j, i);
      stacked(2 + i, j) = b(i, j);
    }
  EXPECT_EQ(rank(stacked), 2u);
  EXPECT_EQ(rank(b), 2u);
}

TEST(Kernel, IdentityHasEmptyKernel) {
  EXPECT_EQ(kernel_basis(Matrix::identity(5)).cols(), 0u);
}

TEST(Kernel, OneByTwo) {
  Matrix m{{1, 1}};
  Matrix k = kernel_basis(m);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k(0, 0) + k(1, 0), 0);
  EXPECT_NE(k(0, 0), 0);
}

TEST(Kernel, RankNullityAndExactAnnihilation) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = Q(dist(rng), den(rng));
    Matrix k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.cols(), cols);
    Matrix prod = m.mul(k);
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod(i, j), 0);
    if (k.cols() > 0) EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Solve, ParticularSolution) {
  Matrix a{{2, 1}, {1, -1}};
  auto x = solve(a, {Q(5), Q(1)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
}

TEST(Solve, Inconsistent) {
  Matrix a{{1, 1}, {1, 1}};
  EXPECT_FALSE(solve(a, {Q(1), Q(2)}).has_value());
}

TEST(Det, KnownValuesAndBareissExactness) {
  Matrix m{{Q(1, 2), 1}, {1, 3}};
  EXPECT_EQ(det(m), Q(1, 2));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
    Rational d = det(a);
    if (d != 0) {
      Matrix inv = inverse(a);
      Matrix prod = a.mul(inv);
      EXPECT_TRUE(prod == Matrix::identity(n));
    } else {
      EXPECT_LT(rank(a), n);
    }
  }
}

TEST(CanonicalDirection, NormalizesScaleAndSign) {
  auto c1 = canonical_direction({Q(1, 2), Q(-1, 3)});
  auto c2 = canonical_direction({Q(-3), Q(2)});
  EXPECT_EQ(c1, c2);
  EXPECT_GT(c1[0], 0);
}

TEST(AffineRank, SquareInPlane) {
  std::vector<Vector> square = {
      {Q(0), Q(0)}, {Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(1)}};
  EXPECT_EQ(affine_rank(square), 2);
  EXPECT_EQ(affine_rank({square[0]}), 0);
  EXPECT_EQ(affine_rank({square[0], square[1]}), 1);
}

}  // namespace
