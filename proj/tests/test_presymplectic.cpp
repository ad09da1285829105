#include <random>

#include <gtest/gtest.h>

#include "lagsel/presymplectic.hpp"
#include "lagsel/random.hpp"
#include "oracles.hpp"

using namespace lagsel;

namespace {

Vector e(std::size_t m, std::size_t one_based) {
  Vector v(m);
  v[one_based - 1] = 1;
  return v;
}

// g54 coadjoint form at xi = (1,0,0,0,0): only B(X4, X3) = 1.
SkewForm g54_form() { return SkewForm::from_upper(5, {{2, 3, Rational(-1)}}); }

// Standard symplectic form on Q^4 pairing e1 with e3 and e2 with e4.
SkewForm symplectic4() { return SkewForm::from_upper(4, {{0, 2, Rational(1)}, {1, 3, Rational(1)}}); }

oracle::Rows columns(const Flag& f) {
  oracle::Rows out;
  for (std::size_t j = 0; j < f.dim(); ++j) out.push_back(f.column(j));
  return out;
}

oracle::Rows rows(const Matrix& a) {
  oracle::Rows out;
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a.row_vector(i));
  return out;
}

}  // namespace

TEST(SkewForm, RejectsNonSkewInput) {
  Matrix a(2, 2);
  a(0, 1) = 1;
  a(1, 0) = 1;
  EXPECT_THROW(SkewForm{a}, InvalidInput);
  Matrix diag(2, 2);
  diag(0, 0) = 1;
  EXPECT_THROW(SkewForm{diag}, InvalidInput);
  EXPECT_THROW(SkewForm{Matrix(2, 3)}, InvalidInput);
}

TEST(Flag, RejectsSingularBasis) {
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  EXPECT_THROW(Flag{a}, InvalidInput);
  const Flag f = Flag::standard(3);
  EXPECT_EQ(f.step(0), Subspace::zero(3));
  EXPECT_EQ(f.step(2), Subspace::coordinate(3, 2));
  EXPECT_EQ(f.step(3), Subspace::full(3));
}

TEST(SignatureVector, ValidatesRangeAndParity) {
  EXPECT_NO_THROW(SignatureVector({1, 2, 3, 2, 3}));
  EXPECT_THROW(SignatureVector({1, 3}), InvalidInput);
  EXPECT_THROW(SignatureVector({1, 1}), InvalidInput);
  EXPECT_EQ(SignatureVector({1, 0, 1}).at(2), 0u);
}

TEST(BPerp, Examples) {
  const SkewForm b = SkewForm::from_upper(2, {{0, 1, Rational(1)}});
  EXPECT_EQ(b_perp(b, Subspace::zero(2)), Subspace::full(2));
  EXPECT_EQ(b_perp(SkewForm::zero(3), Subspace::coordinate(3, 2)), Subspace::full(3));
  EXPECT_EQ(b_perp(b, Subspace::span(2, {e(2, 1)})), Subspace::span(2, {e(2, 1)}));
  EXPECT_THROW(b_perp(b, Subspace::full(3)), DimensionMismatch);
}

TEST(NullSpace, Examples) {
  EXPECT_EQ(null_space(SkewForm::zero(3)), Subspace::full(3));
  EXPECT_EQ(null_space(symplectic4()), Subspace::zero(4));
  EXPECT_EQ(null_space(g54_form()), Subspace::span(5, {e(5, 1), e(5, 2), e(5, 5)}));
}

TEST(Restrict, Examples) {
  const SkewForm b = g54_form();
  EXPECT_EQ(restrict(b, Flag::standard(5), 5), b);
  EXPECT_EQ(restrict(b, Flag::standard(5), 1), SkewForm::zero(1));
  const SkewForm b4 = restrict(b, Flag::standard(5), 4);
  EXPECT_EQ(b4, SkewForm::from_upper(4, {{2, 3, Rational(-1)}}));
  EXPECT_THROW(restrict(b, Flag::standard(5), 0), InvalidInput);
  EXPECT_THROW(restrict(b, Flag::standard(5), 6), InvalidInput);
}

TEST(Restrict, ComposesAlongTheFlag) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const SkewForm b = random::skew_form(rng, m);
    const Flag f = random::flag(rng, m);
    const std::size_t outer = std::uniform_int_distribution<std::size_t>(1, m)(rng);
    const std::size_t inner = std::uniform_int_distribution<std::size_t>(1, outer)(rng);
    EXPECT_EQ(restrict(restrict(b, f, outer), Flag::standard(outer), inner), restrict(b, f, inner));
  }
}

TEST(VergneSelect, Examples) {
  EXPECT_EQ(vergne_select(SkewForm::zero(4), Flag::standard(4)), Subspace::full(4));
  EXPECT_EQ(vergne_select(g54_form(), Flag::standard(5)), Subspace::span(5, {e(5, 1), e(5, 2), e(5, 3), e(5, 5)}));
  // g615 at xi = (0,1,0,0,0,0): only B(X5, X4) = 1
  const SkewForm g615 = SkewForm::from_upper(6, {{3, 4, Rational(-1)}});
  EXPECT_EQ(vergne_select(g615, Flag::standard(6)),
            Subspace::span(6, {e(6, 1), e(6, 2), e(6, 3), e(6, 4), e(6, 6)}));
}

TEST(SignatureVectorOp, Examples) {
  EXPECT_EQ(signature_vector(SkewForm::zero(3), Flag::standard(3)).values(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(signature_vector(g54_form(), Flag::standard(5)).values(), (std::vector<std::size_t>{1, 2, 3, 2, 3}));
  const SkewForm g615 = SkewForm::from_upper(6, {{3, 4, Rational(-1)}});
  EXPECT_EQ(signature_vector(g615, Flag::standard(6)).values(), (std::vector<std::size_t>{1, 2, 3, 4, 3, 4}));
}

TEST(Isotropy, Examples) {
  const SkewForm s = symplectic4();
  EXPECT_TRUE(is_isotropic(s, Subspace::span(4, {Vector{1, 2, 3, 4}})));
  EXPECT_FALSE(is_isotropic(s, Subspace::full(4)));
  EXPECT_TRUE(is_isotropic(g54_form(), Subspace::span(5, {e(5, 1), e(5, 2), e(5, 3), e(5, 5)})));
  EXPECT_TRUE(is_lagrangian(s, Subspace::span(4, {e(4, 1), e(4, 2)})));
  EXPECT_FALSE(is_lagrangian(s, Subspace::span(4, {e(4, 1)})));
  EXPECT_TRUE(is_lagrangian(SkewForm::zero(3), Subspace::full(3)));
  EXPECT_FALSE(is_lagrangian(SkewForm::zero(3), Subspace::coordinate(3, 2)));
  EXPECT_FALSE(is_lagrangian(g54_form(), null_space(g54_form())));
}

TEST(Presymplectic, RandomPropertiesAgainstOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const SkewForm b = random::skew_form(rng, m);
    const Flag f = random::flag(rng, m);
    const Subspace n = null_space(b);
    const Subspace p = vergne_select(b, f);

    EXPECT_EQ((m - n.dim()) % 2, 0u);
    EXPECT_EQ(n.dim(), m - oracle::rank(rows(b.matrix())));
    EXPECT_TRUE(oracle::isotropic(rows(b.matrix()), p.basis_vectors()));
    EXPECT_EQ(2 * p.dim(), m + n.dim());
    EXPECT_TRUE(oracle::span_contains(p.basis_vectors(), n.basis_vectors()));
    EXPECT_TRUE(is_lagrangian(b, p));
    for (std::size_t j = 1; j <= m; ++j) EXPECT_TRUE(contains(p, embed(f, j, null_space(restrict(b, f, j)))));
    EXPECT_EQ(signature_vector(b, f).values(), oracle::signature(rows(b.matrix()), columns(f)));

    const Subspace s = random::subspace(rng, m, std::uniform_int_distribution<std::size_t>(0, m)(rng));
    const Subspace perp = b_perp(b, s);
    for (const auto& x : s.basis_vectors())
      for (const auto& y : perp.basis_vectors()) EXPECT_EQ(b(x, y), 0);
    EXPECT_TRUE(contains(b_perp(b, perp), s));
    const Subspace sn = sum(s, n);
    EXPECT_EQ(b_perp(b, b_perp(b, sn)), sn);
  }
}
