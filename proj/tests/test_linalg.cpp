#include <random>

#include <gtest/gtest.h>

#include "lagsel/matrix.hpp"
#include "lagsel/random.hpp"
#include "lagsel/subspace.hpp"
#include "oracles.hpp"

using namespace lagsel;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("abc"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

TEST(Rational, BigCoefficientsStayExact) {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x = x * Rational(3, 2);
  for (int i = 0; i < 200; ++i) x = x / Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
}

TEST(Matrix, RrefKeepsShapeAndPivots) {
  const Matrix a = Matrix::from_rows({vec({1, 2, 3}), vec({2, 4, 6}), vec({0, 1, 1})}, 3);
  const RowEchelon e = rref(a);
  EXPECT_EQ(e.reduced.rows(), 3u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.reduced.row_vector(0), vec({1, 0, 1}));
  EXPECT_EQ(e.reduced.row_vector(1), vec({0, 1, 1}));
  EXPECT_TRUE(is_zero(e.reduced.row_vector(2)));
  EXPECT_EQ(rank(a), 2u);
}

TEST(Matrix, InverseRoundTrip) {
  const Matrix a = Matrix::from_rows({vec({2, 1}), vec({1, 1})}, 2);
  EXPECT_EQ(a * inverse(a), Matrix::identity(2));
  EXPECT_THROW(inverse(Matrix::from_rows({vec({1, 2}), vec({2, 4})}, 2)), InvalidInput);
}

TEST(Matrix, RankNullityOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(random::vector(rng, c, 0.5));
    const Matrix a = Matrix::from_rows(rows, c);
    const Subspace k = kernel(a);
    EXPECT_EQ(rank(a) + k.dim(), c);
    EXPECT_EQ(rank(a), oracle::rank(rows));
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(a * v));
  }
}

TEST(Subspace, TrivialCases) {
  EXPECT_EQ(Subspace::zero(3).dim(), 0u);
  EXPECT_EQ(Subspace::full(3).dim(), 3u);
  EXPECT_EQ(Subspace::full(3).codim(), 0u);
  EXPECT_EQ(Subspace::span(3, {}), Subspace::zero(3));
  EXPECT_EQ(Subspace::coordinate(4, 2), Subspace::span(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0})}));
  EXPECT_EQ(Subspace::zero(0).dim(), 0u);
}

TEST(Subspace, CanonicalFormIgnoresGenerators) {
  const Subspace a = Subspace::span(3, {vec({1, 1, 0}), vec({0, 1, 1})});
  const Subspace b = Subspace::span(3, {vec({1, 2, 1}), vec({2, 1, -1}), vec({1, 0, -1})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), b.basis());
}

TEST(Subspace, SumIntersectContains) {
  const Subspace x = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  const Subspace y = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  EXPECT_EQ(intersect(x, y), Subspace::span(3, {vec({0, 1, 0})}));
  EXPECT_EQ(sum(x, y), Subspace::full(3));
  EXPECT_TRUE(contains(x, Subspace::span(3, {vec({1, 1, 0})})));
  EXPECT_FALSE(contains(x, y));
  EXPECT_TRUE(x.contains(vec({3, -2, 0})));
  EXPECT_FALSE(x.contains(vec({0, 0, 1})));
  EXPECT_THROW(sum(x, Subspace::full(2)), DimensionMismatch);
}

TEST(Subspace, AnnihilatorIsOrthogonalComplement) {
  const Subspace s = Subspace::span(4, {vec({1, 2, 0, 0}), vec({0, 0, 1, 1})});
  const Subspace a = annihilator(s);
  EXPECT_EQ(a.dim(), 2u);
  for (const auto& u : s.basis_vectors())
    for (const auto& v : a.basis_vectors()) EXPECT_EQ(dot(u, v), 0);
  EXPECT_EQ(annihilator(a), s);
}

TEST(Subspace, RandomPropertiesAgainstOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const Subspace a = random::subspace(rng, m, std::uniform_int_distribution<std::size_t>(0, m)(rng));
    const Subspace b = random::subspace(rng, m, std::uniform_int_distribution<std::size_t>(0, m)(rng));
    const Subspace c = random::subspace(rng, m, std::uniform_int_distribution<std::size_t>(0, m)(rng));

    // canonical basis spans the same space the oracle sees
    EXPECT_EQ(a.dim(), oracle::rank(a.basis_vectors()));
    // Grassmann dimension formula
    EXPECT_EQ(sum(a, b).dim() + intersect(a, b).dim(), a.dim() + b.dim());
    EXPECT_TRUE(oracle::same_span(sum(a, b).basis_vectors(), oracle::concat(a.basis_vectors(), b.basis_vectors())));
    EXPECT_TRUE(contains(a, intersect(a, b)) && contains(b, intersect(a, b)));
    // modular law: if a <= c then a + (b n c) = (a + b) n c
    const Subspace ac = sum(a, c);
    EXPECT_EQ(sum(a, intersect(b, ac)), intersect(sum(a, b), ac));
    EXPECT_EQ(contains(a, b), oracle::span_contains(a.basis_vectors(), b.basis_vectors()));
  }
}
