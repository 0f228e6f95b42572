#include <gtest/gtest.h>

#include <random>

#include "eqlef/char_poly.hpp"
#include "eqlef/factor.hpp"
#include "eqlef/smith.hpp"
#include "oracles.hpp"

using namespace eqlef;

TEST(CharPoly, IdentityIsPowerOfXMinusOne) {
  EXPECT_EQ(char_poly(IntMatrix::identity(3)), (IntPolynomial{-1, 1}).pow(3));
}

TEST(CharPoly, Swap) { EXPECT_EQ(char_poly(IntMatrix{{0, 1}, {1, 0}}), (IntPolynomial{-1, 0, 1})); }

TEST(CharPoly, CompanionMatrix) {
  const IntPolynomial p{-5, 2, 0, 1};  // x^3 + 2x - 5
  EXPECT_EQ(char_poly(companion_matrix(p)), p);
}

TEST(CharPoly, EmptyMatrixIsOne) { EXPECT_EQ(char_poly(IntMatrix(0, 0)), IntPolynomial::constant(1)); }

TEST(CharPoly, NonSquareThrows) { EXPECT_THROW(char_poly(IntMatrix(2, 3)), DimensionError); }

TEST(CharPoly, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix a = oracle::random_matrix(rng, n, 6);
    ASSERT_EQ(char_poly(a), oracle::char_poly_laplace(a)) << a.to_string();
  }
}

TEST(CharPoly, UnimodularConjugationInvariant) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix a = oracle::random_matrix(rng, n, 5);
    auto [u, uinv] = oracle::random_unimodular(rng, n);
    ASSERT_EQ(u * uinv, IntMatrix::identity(n));
    ASSERT_EQ(char_poly(u * a * uinv), char_poly(a));
  }
}

TEST(CharPoly, BlockTriangularMultiplies) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t nb = 1 + trial % 3, nd = 1 + (trial / 3) % 3;
    IntMatrix b = oracle::random_matrix(rng, nb, 5), d = oracle::random_matrix(rng, nd, 5);
    IntMatrix c(nb, nd);
    std::uniform_int_distribution<int> e(-5, 5);
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nd; ++j) c(i, j) = e(rng);
    ASSERT_EQ(char_poly(IntMatrix::block_upper(b, c, d)), char_poly(b) * char_poly(d));
  }
}

TEST(IntMatrix, BareissDeterminant) {
  EXPECT_EQ(IntMatrix({{2, 4}, {6, 8}}).det(), -8);
  EXPECT_EQ(IntMatrix({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}).det(), -2);
  EXPECT_EQ(IntMatrix(0, 0).det(), 1);
}

namespace {
void expect_valid_snf(const IntMatrix &m, const SmithNormalForm &snf) {
  EXPECT_EQ(snf.left * m * snf.right, snf.diagonal_matrix());
  EXPECT_EQ(iabs(snf.left.det()), 1);
  EXPECT_EQ(iabs(snf.right.det()), 1);
  EXPECT_EQ(snf.left * snf.left_inverse, IntMatrix::identity(m.rows()));
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    EXPECT_GT(snf.diagonal[i], 0);
    if (i + 1 < snf.diagonal.size()) {
      EXPECT_EQ(snf.diagonal[i + 1] % snf.diagonal[i], 0);
    }
  }
}
}  // namespace

TEST(Smith, ZeroMatrixHasEmptyDiagonal) {
  IntMatrix z(2, 3);
  auto snf = smith_normal_form(z);
  EXPECT_TRUE(snf.diagonal.empty());
  expect_valid_snf(z, snf);
}

TEST(Smith, DiagonalTwoThree) {
  // gcd/lcm rule on a 2x2 diagonal: (gcd(2,3), lcm(2,3)) = (1, 6)
  IntMatrix m{{2, 0}, {0, 3}};
  auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.diagonal, (IntVector{1, 6}));
  expect_valid_snf(m, snf);
}

TEST(Smith, TwoFourSixEight) {
  // determinantal divisors: d1 = gcd(entries) = 2, d1*d2 = |det| = 8
  IntMatrix m{{2, 4}, {6, 8}};
  auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.diagonal, (IntVector{2, 4}));
  expect_valid_snf(m, snf);
}

TEST(Smith, RandomRectangularRoundTrip) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> e(-6, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (trial % 7 == 0 && j == 0) ? 0 : e(rng);
    auto snf = smith_normal_form(m);
    expect_valid_snf(m, snf);
    if (r == c) {
      Integer prod = 1;
      for (const auto &d : snf.diagonal) prod *= d;
      EXPECT_EQ(snf.diagonal.size() == r ? prod : Integer(0), iabs(m.det()));
    }
  }
}

TEST(Kernel, IdentityHasNone) { EXPECT_TRUE(kernel_basis(IntMatrix::identity(3)).empty()); }

TEST(Kernel, ZeroHasUnitVectors) {
  EXPECT_EQ(kernel_basis(IntMatrix(2, 2)), (std::vector<IntVector>{{1, 0}, {0, 1}}));
}

TEST(Kernel, AllOnes) {
  // over Q the kernel is spanned by (1,-1), already primitive
  EXPECT_EQ(kernel_basis(IntMatrix{{1, 1}, {1, 1}}), (std::vector<IntVector>{{1, -1}}));
}

TEST(Kernel, VectorsAreInKernelAndSpanIt) {
  IntMatrix m{{2, 4, 6}, {1, 2, 3}};
  auto basis = kernel_basis(m);
  ASSERT_EQ(basis.size(), 2U);
  for (const auto &v : basis) EXPECT_TRUE(is_zero_vector(m.apply(v)));
  // kernel is {x = -2y - 3z}; by hand its Hermite basis is (1,1,-1), (0,3,-2)
  EXPECT_EQ(basis, (std::vector<IntVector>{{1, 1, -1}, {0, 3, -2}}));
}

TEST(Hermite, CanonicalAcrossBases) {
  auto a = hermite_basis({{2, 1}, {1, 1}});
  auto b = hermite_basis({{3, 2}, {1, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, (std::vector<IntVector>{{1, 0}, {0, 1}}));
}

TEST(Factor, XFourMinusOne) {
  auto f = factor_over_Q(IntPolynomial{-1, 0, 0, 0, 1});
  EXPECT_EQ(f.unit, 1);
  ASSERT_EQ(f.factors.size(), 3U);
  EXPECT_EQ(f.factors[0], std::make_pair(IntPolynomial{-1, 1}, 1U));
  EXPECT_EQ(f.factors[1], std::make_pair(IntPolynomial{1, 1}, 1U));
  EXPECT_EQ(f.factors[2], std::make_pair(IntPolynomial{1, 0, 1}, 1U));
}

TEST(Factor, XSquaredMinusTwoIsIrreducible) {
  auto f = factor_over_Q(IntPolynomial{-2, 0, 1});
  ASSERT_EQ(f.factors.size(), 1U);
  EXPECT_EQ(f.factors[0], std::make_pair(IntPolynomial{-2, 0, 1}, 1U));
}

TEST(Factor, RepeatedFactor) {
  // (x^2+1)^2 (x-3) expanded by hand: x^5 - 3x^4 + 2x^3 - 6x^2 + x - 3
  auto f = factor_over_Q(IntPolynomial{-3, 1, -6, 2, -3, 1});
  ASSERT_EQ(f.factors.size(), 2U);
  EXPECT_EQ(f.factors[0], std::make_pair(IntPolynomial{-3, 1}, 1U));
  EXPECT_EQ(f.factors[1], std::make_pair(IntPolynomial{1, 0, 1}, 2U));
}

TEST(Factor, ZeroThrows) { EXPECT_THROW(factor_over_Q(IntPolynomial{}), DomainError); }

TEST(Factor, ContentAndSign) {
  // -6x^2 + 6 = -6 (x-1)(x+1)
  auto f = factor_over_Q(IntPolynomial{6, 0, -6});
  EXPECT_EQ(f.unit, -6);
  EXPECT_EQ(f.expand(), (IntPolynomial{6, 0, -6}));
  ASSERT_EQ(f.factors.size(), 2U);
}

TEST(Factor, NonMonicFactors) {
  // (2x+1)(3x^2-2)
  IntPolynomial p = IntPolynomial{1, 2} * IntPolynomial{-2, 0, 3};
  auto f = factor_over_Q(p);
  EXPECT_EQ(f.expand(), p);
  ASSERT_EQ(f.factors.size(), 2U);
  EXPECT_EQ(f.factors[0].first, (IntPolynomial{1, 2}));
  EXPECT_EQ(f.factors[1].first, (IntPolynomial{-2, 0, 3}));
}

TEST(Factor, PowerOfX) {
  auto f = factor_over_Q(IntPolynomial{0, 0, 0, 1});
  ASSERT_EQ(f.factors.size(), 1U);
  EXPECT_EQ(f.factors[0], std::make_pair(IntPolynomial{0, 1}, 3U));
}

TEST(Factor, SwinnertonDyerStyleManyModularFactors) {
  // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime.
  auto f = factor_over_Q(IntPolynomial{1, 0, -10, 0, 1});
  ASSERT_EQ(f.factors.size(), 1U);
  EXPECT_TRUE(oracle::is_irreducible_monic(f.factors[0].first));
}

TEST(Factor, CyclotomicProduct) {
  // x^12 - 1 = Phi1 Phi2 Phi3 Phi4 Phi6 Phi12
  IntVector c(13);
  c[0] = -1;
  c[12] = 1;
  auto f = factor_over_Q(IntPolynomial(c));
  EXPECT_EQ(f.factors.size(), 6U);
  EXPECT_EQ(f.expand(), IntPolynomial(c));
}

TEST(Oracle, IrreducibilityOracleSanity) {
  EXPECT_TRUE(oracle::is_irreducible_monic(IntPolynomial{1, 0, 1}));
  EXPECT_FALSE(oracle::is_irreducible_monic(IntPolynomial{-1, 0, 1}));
  EXPECT_FALSE(oracle::is_irreducible_monic(IntPolynomial{1, 0, 2, 0, 1}));  // (x^2+1)^2
  EXPECT_TRUE(oracle::is_irreducible_monic(IntPolynomial{-2, 0, 0, 1}));
}

TEST(Factor, RandomProductsReconstruct) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coef(-5, 5), deg(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    IntPolynomial prod = IntPolynomial::constant(1);
    int total = 0;
    while (total < 6) {
      int d = deg(rng);
      if (total + d > 8) break;
      IntVector c(static_cast<std::size_t>(d) + 1);
      for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = coef(rng);
      c[static_cast<std::size_t>(d)] = 1;
      prod = prod * IntPolynomial(c);
      total += d;
    }
    auto f = factor_over_Q(prod);
    ASSERT_EQ(f.expand(), prod);
    for (const auto &[g, e] : f.factors) {
      EXPECT_TRUE(g.is_monic());
      if (g.degree() <= 4) {
        EXPECT_TRUE(oracle::is_irreducible_monic(g)) << g.to_string();
      }
    }
  }
}

TEST(Polynomial, Rendering) {
  EXPECT_EQ((IntPolynomial{-1, 1}).to_string(), "x−1");
  EXPECT_EQ((IntPolynomial{1, 0, 1}).to_string(), "x²+1");
  EXPECT_EQ((IntPolynomial{0, 1}).to_string(), "x");
  EXPECT_EQ((IntPolynomial{-5, 2, 0, 1}).to_string(), "x³+2x−5");
  EXPECT_EQ((IntPolynomial{-5, 2, 0, 1}).to_ascii(), "x^3+2*x-5");
  EXPECT_EQ((IntPolynomial{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}).to_string(), "x¹¹");
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
}

TEST(Polynomial, ParseRoundTrip) {
  for (const IntPolynomial &p : {IntPolynomial{-1, 0, 0, 0, 1}, IntPolynomial{-5, 2, 0, 1}, IntPolynomial{3},
                                 IntPolynomial{0, -1}, IntPolynomial{7, 0, -12, 0, 0, 0, 0, 0, 0, 0, 0, 1}}) {
    EXPECT_EQ(parse_polynomial(p.to_string()), p) << p.to_string();
    EXPECT_EQ(parse_polynomial(p.to_ascii()), p) << p.to_ascii();
  }
  EXPECT_EQ(parse_polynomial("2x^2 + 3x - 1"), (IntPolynomial{-1, 3, 2}));
  EXPECT_THROW(parse_polynomial("x^"), ParseError);
  EXPECT_THROW(parse_polynomial("x y"), ParseError);
}

TEST(Polynomial, GcdAndDivision) {
  IntPolynomial a = IntPolynomial{-1, 1} * IntPolynomial{2, 0, 1};
  IntPolynomial b = IntPolynomial{-1, 1} * IntPolynomial{3, 1};
  EXPECT_EQ(IntPolynomial::gcd(a, b), (IntPolynomial{-1, 1}));
  EXPECT_EQ(*IntPolynomial::divide_exact(a, IntPolynomial{-1, 1}), (IntPolynomial{2, 0, 1}));
  EXPECT_FALSE(IntPolynomial::divide_exact(a, IntPolynomial{3, 1}).has_value());
}

TEST(Polynomial, CanonicalOrder) {
  // degree first, then constant term by magnitude with negatives first
  EXPECT_LT((IntPolynomial{0, 1}), (IntPolynomial{-1, 1}));
  EXPECT_LT((IntPolynomial{-1, 1}), (IntPolynomial{1, 1}));
  EXPECT_LT((IntPolynomial{1, 1}), (IntPolynomial{-3, 1}));
  EXPECT_LT((IntPolynomial{-3, 1}), (IntPolynomial{1, 0, 1}));
}
