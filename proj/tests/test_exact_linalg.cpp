#include "oracles.hpp"

#include <wedkit/wedkit.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace wedkit;

TEST(Rational, ParseAndPrintRoundTrip) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Rational, Binomials) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(factorial(5), 120);
}

TEST(Matrix, KroneckerMatchesOracle) {
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = oracle::random_matrix(rng, 2, 3), b = oracle::random_matrix(rng, 3, 2);
    EXPECT_EQ(kron(a, b), oracle::kron(a, b));
    EXPECT_EQ(a * b, oracle::multiply(a, b));
  }
}

TEST(Matrix, DimensionMismatchThrows) {
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), InputError);
  EXPECT_THROW(Matrix(2, 3) + Matrix(3, 2), InputError);
}

TEST(RowReduce, RankMatchesTextbookElimination) {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t r = dim(rng), c = dim(rng);
    Matrix m = oracle::random_matrix(rng, r, c);
    // force some dependence
    if (r > 2 && t % 2 == 0)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2, 3) - m(1, j);
    EXPECT_EQ(rank(m), oracle::rank(m));
    const Echelon e = row_reduce(m);
    EXPECT_EQ(e.rank(), e.pivots.size());
    for (std::size_t i = 0; i < e.rank(); ++i) EXPECT_EQ(e.reduced(i, e.pivots[i]), 1);
  }
}

TEST(RowReduce, KernelVectorsAreAnnihilated) {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    Matrix m = oracle::random_matrix(rng, 3, 5);
    for (std::size_t j = 0; j < 5; ++j) m(2, j) = m(0, j) + m(1, j);
    const auto k = kernel_basis(m);
    EXPECT_EQ(k.size(), 5 - oracle::rank(m));
    for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(Solve, CanonicalSolutionAndInconsistency) {
  Matrix a = Matrix::from_rows({{1, 1, 0}, {0, 0, 1}});
  const auto x = solve(a, {3, 4});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Vector{3, 0, 4}));
  Matrix b = Matrix::from_rows({{1, 1}, {2, 2}});
  EXPECT_FALSE(solve(b, {1, 3}));
}

TEST(Inverse, RandomInvertible) {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    const Matrix m = oracle::random_matrix(rng, 4, 4);
    const auto inv = inverse(m);
    if (oracle::rank(m) < 4) {
      EXPECT_FALSE(inv);
      continue;
    }
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, Matrix::identity(4));
  }
}

TEST(Subspace, CanonicalFormAndComplement) {
  const Subspace a = Subspace::span(3, {{1, 2, 0}, {2, 4, 1}});
  const Subspace b = Subspace::span(3, {{0, 0, 5}, {3, 6, 0}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(Vector{1, 2, 7}));
  EXPECT_FALSE(a.contains(Vector{0, 1, 0}));
  EXPECT_EQ(a.complement_indices(), std::vector<std::size_t>{1});
  const auto c = relative_complement(Subspace::full(3), a);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ((a + Subspace::span(3, c)).dim(), 3u);
}

TEST(Polynomial, DivisionAndGcd) {
  const Polynomial x = Polynomial::x();
  const Polynomial f = (x - Polynomial::constant(1)) * (x - Polynomial::constant(2)) * (x + Polynomial::constant(3));
  const Polynomial g = (x - Polynomial::constant(1)) * (x + Polynomial::constant(5));
  EXPECT_EQ(gcd(f, g), x - Polynomial::constant(1));
  const Bezout b = extended_gcd(f, g);
  EXPECT_EQ(b.s * f + b.t * g, b.gcd);
  auto [q, r] = divmod(f, g);
  EXPECT_EQ(q * g + r, f);
  EXPECT_LT(r.degree(), g.degree());
}

TEST(Polynomial, FactorOverRationals) {
  const Polynomial x = Polynomial::x();
  const Polynomial one = Polynomial::constant(1);
  // (x^2 - 2)(x^2 + 1)^2 (2x - 3)
  const Polynomial x2m2 = x * x - Polynomial::constant(2);
  const Polynomial x2p1 = x * x + one;
  const Polynomial lin = Polynomial::constant(2) * x - Polynomial::constant(3);
  const auto fs = factor(x2m2 * x2p1 * x2p1 * lin);
  ASSERT_EQ(fs.size(), 3u);
  Polynomial prod = one;
  for (const auto& f : fs) {
    EXPECT_TRUE(is_irreducible(f.factor));
    for (unsigned k = 0; k < f.multiplicity; ++k) prod = prod * f.factor;
  }
  EXPECT_EQ(prod.monic(), (x2m2 * x2p1 * x2p1 * lin).monic());
  EXPECT_EQ(fs[0].factor.degree(), 1);
  EXPECT_FALSE(is_irreducible(x * x - one));
  EXPECT_TRUE(is_irreducible(x * x * x - Polynomial::constant(2)));
}

TEST(Polynomial, SwinnertonDyerStyleQuartic) {
  // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime.
  const Polynomial x = Polynomial::x();
  const Polynomial f = x * x * x * x - Polynomial::constant(10) * x * x + Polynomial::constant(1);
  EXPECT_TRUE(is_irreducible(f));
}
