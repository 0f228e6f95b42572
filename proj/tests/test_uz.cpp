#include <gtest/gtest.h>

#include <random>

#include "eqlef/uz.hpp"
#include "oracles.hpp"

using namespace eqlef;

TEST(UZ, IdentityTwoByTwo) {
  UZClass c = class_of_matrix(IntMatrix::identity(2));
  EXPECT_EQ(c, UZClass::generator(IntPolynomial{-1, 1}, 2));
  EXPECT_EQ(c.to_string(), "+2·(x−1)");
}

TEST(UZ, RotationIsIrreducibleQuadratic) {
  UZClass c = class_of_matrix(IntMatrix{{0, -1}, {1, 0}});
  EXPECT_EQ(c.to_string(), "+1·(x²+1)");
}

TEST(UZ, BlockTriangularTwoThree) {
  IntMatrix m = IntMatrix::block_upper(IntMatrix{{2}}, IntMatrix{{7}}, IntMatrix{{3}});
  EXPECT_EQ(class_of_matrix(m), UZClass::generator(IntPolynomial{-2, 1}) + UZClass::generator(IntPolynomial{-3, 1}));
}

TEST(UZ, EmptyMatrixIsZero) { EXPECT_TRUE(class_of_matrix(IntMatrix(0, 0)).is_zero()); }
TEST(UZ, NonSquareThrows) { EXPECT_THROW(class_of_matrix(IntMatrix(1, 2)), DimensionError); }

TEST(UZ, ZeroMatrixIsGeneratorX) {
  EXPECT_EQ(class_of_matrix(IntMatrix{{0}}).to_string(), "+1·(x)");
}

TEST(UZ, GroupLaws) {
  UZClass a = class_of_matrix(IntMatrix{{1, 2}, {3, 4}});
  EXPECT_TRUE(uz_add(a, uz_neg(a)).is_zero());
  EXPECT_EQ(uz_add(class_of_matrix(IntMatrix{{1}}), class_of_matrix(IntMatrix{{1}})),
            UZClass::generator(IntPolynomial{-1, 1}, 2));
  EXPECT_TRUE(uz_eq(a + UZClass{}, a));
  EXPECT_EQ((a - a).to_string(), "0");
}

TEST(UZ, CanonicalRenderingOrder) {
  UZClass c = UZClass::generator(IntPolynomial{-3, 1}, -1) + UZClass::generator(IntPolynomial{1, 1}) +
              UZClass::generator(IntPolynomial{-1, 1});
  EXPECT_EQ(c.to_string(), "+1·(x−1) +1·(x+1) −1·(x−3)");
}

TEST(UZ, DirectSumAdditivityRandom) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = oracle::random_matrix(rng, 2, 5), d = oracle::random_matrix(rng, 2, 5);
    ASSERT_EQ(class_of_matrix(IntMatrix::direct_sum(a, d)), class_of_matrix(a) + class_of_matrix(d));
  }
}

TEST(UZ, ConjugationInvariance) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    IntMatrix a = oracle::random_matrix(rng, n, 5);
    auto [u, uinv] = oracle::random_unimodular(rng, n);
    ASSERT_EQ(class_of_matrix(u * a * uinv), class_of_matrix(a));
  }
}

TEST(UZ, RationallyButNotIntegrallyConjugate) {
  // [[1,0],[0,-1]] and [[1,1],[0,-1]] share x²−1 but are not Z-conjugate
  // (the cokernels of A − I differ). They still have the same class.
  EXPECT_EQ(class_of_matrix(IntMatrix{{1, 0}, {0, -1}}), class_of_matrix(IntMatrix{{1, 1}, {0, -1}}));
}

TEST(UZ, CompanionBlocksPermuted) {
  IntPolynomial p{-5, 2, 0, 1}, q{1, 0, 1};
  IntMatrix cp = companion_matrix(p), cq = companion_matrix(q);
  UZClass expected = UZClass::generator(p) + UZClass::generator(q);
  EXPECT_EQ(class_of_matrix(IntMatrix::direct_sum(cp, cq)), expected);
  EXPECT_EQ(class_of_matrix(IntMatrix::direct_sum(cq, cp)), expected);
  EXPECT_EQ(class_of_matrix(companion_matrix(p * q)), expected);
}
