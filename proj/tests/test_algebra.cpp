#include "fixtures.hpp"
#include "oracles.hpp"

#include <wedkit/wedkit.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace wedkit;

namespace {

Algebra truncated_polynomial(std::size_t n) { return polynomial_quotient(Polynomial::monomial(n)); }

Vector random_element(const Algebra& a, std::mt19937& rng) {
  Vector v(a.dim());
  for (auto& x : v) x = oracle::random_rational(rng);
  return v;
}

// Cyclic group C_n and S_3 as image lists.
std::vector<std::vector<std::size_t>> cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> g;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (i + k) % n;
    g.push_back(p);
  }
  return g;
}

std::vector<std::vector<std::size_t>> s3() { return {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}; }

}  // namespace

TEST(Algebra, RejectsBadInput) {
  EXPECT_THROW(Algebra(Vector{}, {}), InputError);
  // Non-associative 2-dim table with unit e0: e1*e1 = e1 + e0 is fine, so break
  // the unit law instead.
  std::vector<std::vector<Vector>> t{{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  EXPECT_NO_THROW(Algebra(Vector{1, 0}, t));
  EXPECT_THROW(Algebra(Vector{0, 1}, t), InputError);
}

TEST(Algebra, LeftRegularExamples) {
  const Algebra a = truncated_polynomial(2);
  EXPECT_EQ(left_regular(a, a.unit()), Matrix::identity(2));
  EXPECT_EQ(left_regular(a, Vector{0, 1}), Matrix::from_rows({{0, 0}, {1, 0}}));
}

TEST(Algebra, LeftRegularIsMultiplicative) {
  const Algebra t = upper_triangular(3);
  std::mt19937 rng(1);
  for (int k = 0; k < 10; ++k) {
    const Vector x = random_element(t, rng), y = random_element(t, rng);
    EXPECT_EQ(left_regular(t, t.multiply(x, y)), left_regular(t, x) * left_regular(t, y));
  }
}

TEST(Radical, Examples) {
  const Subspace r2 = radical(upper_triangular(2));
  EXPECT_EQ(r2, Subspace::span(3, {{0, 1, 0}}));  // E12 in basis E11, E12, E22
  EXPECT_TRUE(radical(full_matrix_algebra(2)).is_zero());
  EXPECT_EQ(radical(truncated_polynomial(3)), Subspace::span(3, {{0, 1, 0}, {0, 0, 1}}));
}

TEST(Radical, NilpotencyIndexExamples) {
  const Algebra t2 = upper_triangular(2);
  EXPECT_EQ(nilpotency_index(t2, radical(t2)), 2u);
  const Algebra p3 = truncated_polynomial(3);
  EXPECT_EQ(nilpotency_index(p3, radical(p3)), 3u);
  EXPECT_EQ(nilpotency_index(p3, Subspace::zero(3)), 1u);
  EXPECT_THROW(nilpotency_index(p3, Subspace::full(3)), InputError);
}

TEST(Radical, UpperTriangularFamily) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Algebra t = upper_triangular(n);
    std::vector<Vector> strict;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j, ++k)
        if (j > i) strict.push_back(unit_vector(t.dim(), k));
    const Subspace r = radical(t);
    EXPECT_EQ(r, Subspace::span(t.dim(), strict));
    EXPECT_EQ(nilpotency_index(t, r), n);
  }
}

TEST(Radical, GroupAlgebrasAreSemisimple) {
  for (const auto& g : {cyclic(2), cyclic(3), s3()}) EXPECT_TRUE(radical(group_algebra(g)).is_zero());
}

TEST(Radical, IsNilpotentIdealWithSemisimpleQuotient) {
  std::mt19937 rng(21);
  for (int t = 0; t < 8; ++t) {
    const auto s = fixture::random_split_algebra(rng, 5);
    const Subspace r = radical(s.algebra);
    EXPECT_EQ(r.dim(), s.radical_dim);
    EXPECT_TRUE(is_two_sided_ideal(s.algebra, r));
    EXPECT_NO_THROW(nilpotency_index(s.algebra, r));
    EXPECT_TRUE(radical(quotient(s.algebra, r).algebra).is_zero());
  }
}

TEST(Radical, DirectProductOfRadicals) {
  const Algebra a = upper_triangular(2), b = truncated_polynomial(3);
  const Algebra ab = direct_product(a, b);
  std::vector<Vector> expected;
  for (const auto& v : radical(a).basis()) {
    Vector w(ab.dim());
    std::copy(v.begin(), v.end(), w.begin());
    expected.push_back(w);
  }
  for (const auto& v : radical(b).basis()) {
    Vector w(ab.dim());
    std::copy(v.begin(), v.end(), w.begin() + static_cast<long>(a.dim()));
    expected.push_back(w);
  }
  EXPECT_EQ(radical(ab), Subspace::span(ab.dim(), expected));
}

// The Jacobson radical (largest ideal with 1 - gf invertible) and the
// trace-form kernel agree here: every element of the kernel makes 1 - yx
// invertible, and any element outside it fails that for some y.
TEST(Radical, AgreesWithQuasiRegularCharacterisation) {
  const Algebra t = upper_triangular(3);
  const Subspace r = radical(t);
  std::mt19937 rng(4);
  for (int k = 0; k < 10; ++k) {
    Vector x(t.dim());
    for (const auto& b : r.basis()) axpy(x, oracle::random_rational(rng), b);
    const Vector y = random_element(t, rng);
    const Matrix m = left_regular(t, t.unit()) - left_regular(t, t.multiply(y, x));
    EXPECT_TRUE(inverse(m).has_value());
  }
  // E11 is outside the radical: 1 - E11 * E11 is not invertible.
  const Vector e11 = unit_vector(t.dim(), 0);
  EXPECT_FALSE(inverse(left_regular(t, t.unit() - t.multiply(e11, e11))).has_value());
}

TEST(Quotient, Examples) {
  const Algebra t2 = upper_triangular(2);
  const Quotient q = quotient(t2, radical(t2));
  ASSERT_EQ(q.algebra.dim(), 2u);
  EXPECT_EQ(q.algebra.product(0, 0), (Vector{1, 0}));
  EXPECT_EQ(q.algebra.product(1, 1), (Vector{0, 1}));
  EXPECT_EQ(q.algebra.product(0, 1), (Vector{0, 0}));

  const Algebra m2 = full_matrix_algebra(2);
  const Quotient id = quotient(m2, Subspace::zero(4));
  EXPECT_EQ(id.projection, Matrix::identity(4));

  const Algebra p2 = truncated_polynomial(2);
  EXPECT_EQ(quotient(p2, radical(p2)).algebra.dim(), 1u);
}

TEST(Decompose, Examples) {
  const auto qq = semisimple_decompose(direct_product(full_matrix_algebra(1), full_matrix_algebra(1)));
  ASSERT_EQ(qq.blocks.size(), 2u);
  for (const auto& b : qq.blocks) {
    EXPECT_EQ(b.block_dim, 1u);
    EXPECT_EQ(b.center_dim, 1u);
    EXPECT_EQ(b.matrix_size, 1u);
  }

  const auto m2 = semisimple_decompose(full_matrix_algebra(2));
  ASSERT_EQ(m2.blocks.size(), 1u);
  EXPECT_EQ(m2.blocks[0].block_dim, 4u);
  EXPECT_EQ(m2.blocks[0].center_dim, 1u);
  EXPECT_EQ(m2.blocks[0].matrix_size, 2u);

  const Polynomial x = Polynomial::x();
  const auto field = semisimple_decompose(polynomial_quotient(x * x - Polynomial::constant(2)));
  ASSERT_EQ(field.blocks.size(), 1u);
  EXPECT_EQ(field.blocks[0].block_dim, 2u);
  EXPECT_EQ(field.blocks[0].center_dim, 2u);
  EXPECT_EQ(field.blocks[0].matrix_size, 1u);
}

TEST(Decompose, GroupAlgebraOfS3) {
  const auto r = semisimple_decompose(group_algebra(s3()));
  ASSERT_EQ(r.blocks.size(), 3u);
  EXPECT_EQ(r.blocks[2].block_dim, 4u);
  EXPECT_EQ(r.blocks[2].matrix_size, 2u);
  EXPECT_TRUE(r.all_split());
}

TEST(Decompose, CentralIdempotentsAreOrthogonalAndSumToOne) {
  std::mt19937 rng(8);
  std::vector<Algebra> cases{group_algebra(s3()), group_algebra(cyclic(3)),
                             direct_product(full_matrix_algebra(2), full_matrix_algebra(1))};
  for (int t = 0; t < 6; ++t) {
    const auto s = fixture::random_split_algebra(rng, 5);
    cases.push_back(quotient(s.algebra, radical(s.algebra)).algebra);
  }
  for (const auto& a : cases) {
    const auto r = semisimple_decompose(a);
    std::size_t total = 0;
    Vector sum(a.dim());
    for (std::size_t i = 0; i < r.blocks.size(); ++i) {
      total += r.blocks[i].block_dim;
      sum = sum + r.blocks[i].central_idempotent;
      const Vector& e = r.blocks[i].central_idempotent;
      EXPECT_EQ(a.multiply(e, e), e);
      for (std::size_t j = 0; j < r.blocks.size(); ++j)
        if (i != j) EXPECT_TRUE(is_zero(a.multiply(e, r.blocks[j].central_idempotent)));
      if (r.blocks[i].matrix_size) {
        const std::size_t n = *r.blocks[i].matrix_size;
        EXPECT_EQ(n * n * r.blocks[i].center_dim, r.blocks[i].block_dim);
        const Vector& f = r.blocks[i].primitive_idempotent;
        EXPECT_EQ(a.multiply(f, f), f);
      }
    }
    EXPECT_EQ(total, a.dim());
    EXPECT_EQ(sum, a.unit());
  }
}

TEST(Decompose, RandomSplitQuotientsAreSplit) {
  std::mt19937 rng(15);
  for (int t = 0; t < 10; ++t) {
    const auto s = fixture::random_split_algebra(rng, 6);
    const auto r = semisimple_decompose(quotient(s.algebra, radical(s.algebra)).algebra);
    EXPECT_TRUE(r.all_split());
    std::vector<std::size_t> got;
    for (const auto& b : r.blocks) got.push_back(b.matrix_size.value_or(0));
    std::vector<std::size_t> want = s.simple_sizes;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
  }
}

TEST(WedderburnCheck, Examples) {
  const auto t3 = is_wedderburn(upper_triangular(3));
  EXPECT_TRUE(t3.wedderburn);
  EXPECT_EQ(t3.radical_index, 3u);
  EXPECT_EQ(t3.quotient_dim, 3u);
  EXPECT_EQ(t3.quotient.blocks.size(), 3u);

  const auto m2 = is_wedderburn(full_matrix_algebra(2));
  EXPECT_TRUE(m2.wedderburn);
  EXPECT_EQ(m2.radical_index, 1u);

  const auto p2 = is_wedderburn(truncated_polynomial(2));
  EXPECT_TRUE(p2.wedderburn);
  EXPECT_EQ(p2.radical_index, 2u);
  EXPECT_EQ(p2.quotient_dim, 1u);
}

TEST(MinimalPolynomial, OfMatrixUnitSum) {
  const Algebra m2 = full_matrix_algebra(2);
  // E12 + E21 squares to 1: minimal polynomial x^2 - 1.
  Vector x(4);
  x[1] = 1;
  x[2] = 1;
  const Polynomial p = minimal_polynomial(m2, x, m2.unit());
  EXPECT_EQ(p, Polynomial::x() * Polynomial::x() - Polynomial::constant(1));
}
