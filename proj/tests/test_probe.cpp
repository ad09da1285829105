#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lagsel/lie.hpp"
#include "lagsel/probe.hpp"
#include "lagsel/random.hpp"
#include "oracles.hpp"

using namespace lagsel;

namespace {

Vector e(std::size_t m, std::size_t one_based) {
  Vector v(m);
  v[one_based - 1] = 1;
  return v;
}

Functional xi_of(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return Functional{v};
}

using Columns = std::vector<std::vector<double>>;

Columns columns_of(const Subspace& s) {
  Columns out;
  for (const auto& v : s.basis_vectors()) {
    std::vector<double> c;
    for (const auto& x : v) c.push_back(to_double(x));
    out.push_back(c);
  }
  return out;
}

Columns random_orthogonal(std::mt19937_64& rng, std::size_t m) {
  std::normal_distribution<double> n(0.0, 1.0);
  Columns q;
  while (q.size() < m) {
    std::vector<double> v(m);
    for (auto& x : v) x = n(rng);
    for (const auto& u : q) {
      double d = 0;
      for (std::size_t i = 0; i < m; ++i) d += u[i] * v[i];
      for (std::size_t i = 0; i < m; ++i) v[i] -= d * u[i];
    }
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    q.push_back(v);
  }
  return q;
}

Columns rotate(const Columns& q, const Columns& cols) {
  Columns out;
  for (const auto& c : cols) {
    std::vector<double> r(c.size(), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::size_t i = 0; i < c.size(); ++i) r[i] += q[k][i] * c[k];
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST(Projector, Examples) {
  const DenseMatrix p = projector(Subspace::span(2, {e(2, 1)}));
  EXPECT_NEAR(p(0, 0), 1.0, 1e-12);
  EXPECT_NEAR(p(0, 1), 0.0, 1e-12);
  EXPECT_NEAR(p(1, 1), 0.0, 1e-12);
  const DenseMatrix full = projector(Subspace::full(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(full(i, j), i == j ? 1.0 : 0.0, 1e-12);
  const DenseMatrix d = projector(Subspace::span(2, {Vector{1, 1}}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(d(i, j), 0.5, 1e-12);
}

TEST(Projector, IdempotentAndSymmetric) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const DenseMatrix p = projector(random::subspace(rng, m, 3));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        double pp = 0;
        for (std::size_t k = 0; k < m; ++k) pp += p(i, k) * p(k, j);
        EXPECT_NEAR(pp, p(i, j), 1e-10);
        EXPECT_NEAR(p(i, j), p(j, i), 1e-10);
      }
  }
}

TEST(Gap, Examples) {
  const Subspace w = Subspace::span(3, {Vector{1, 2, 3}});
  EXPECT_NEAR(gap(w, w), 0.0, 1e-12);
  EXPECT_NEAR(gap(Subspace::span(5, {e(5, 4)}), Subspace::span(5, {e(5, 5)})), 1.0, 1e-12);
  const double theta = M_PI / 6;
  const FloatSubspace a(2, {{1.0, 0.0}});
  const FloatSubspace b(2, {{std::cos(theta), std::sin(theta)}});
  EXPECT_NEAR(gap(a, b), 0.5, 1e-12);
  EXPECT_NEAR(gap(Subspace::coordinate(3, 1), Subspace::coordinate(3, 2)), 1.0, 1e-12);
  EXPECT_THROW(gap(Subspace::full(2), Subspace::full(3)), DimensionMismatch);
}

TEST(Gap, PseudometricAndOrthogonalInvariance) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, m - 1)(rng);
    auto pick = [&] {
      while (true) {
        Subspace s = random::subspace(rng, m, k);
        if (s.dim() == k) return s;
      }
    };
    const Subspace a = pick(), b = pick(), c = pick();
    const double ab = gap(a, b), bc = gap(b, c), ac = gap(a, c);
    EXPECT_NEAR(ab, gap(b, a), 1e-9);
    EXPECT_LE(ac, ab + bc + 1e-9);
    EXPECT_GE(ab, -1e-9);
    EXPECT_LE(ab, 1.0 + 1e-9);
    const Columns q = random_orthogonal(rng, m);
    const FloatSubspace qa(m, rotate(q, columns_of(a)));
    const FloatSubspace qb(m, rotate(q, columns_of(b)));
    EXPECT_NEAR(gap(qa, qb), ab, 1e-9);
    if (k == 1) {
      EXPECT_NEAR(ab, oracle::line_gap(columns_of(a)[0], columns_of(b)[0]), 1e-9);
    }
  }
}

TEST(SymmetricEigen, MatchesKnownSpectrum) {
  DenseMatrix a(3);
  a(0, 0) = 2, a(0, 1) = 1, a(1, 0) = 1, a(1, 1) = 2, a(2, 2) = -1;
  const auto eig = symmetric_eigenvalues(a);
  EXPECT_NEAR(eig[0], -1.0, 1e-12);
  EXPECT_NEAR(eig[1], 1.0, 1e-12);
  EXPECT_NEAR(eig[2], 3.0, 1e-12);
}

TEST(ProjectorSum, Examples) {
  EXPECT_TRUE(projector_sum_range_check({Subspace::span(3, {e(3, 1)}), Subspace::span(3, {e(3, 2)})}));
  const Subspace s = Subspace::span(4, {Vector{1, 1, 0, 2}});
  EXPECT_TRUE(projector_sum_range_check({s, s}));
  const Matrix p = exact_projector(Subspace::span(2, {Vector{1, 1}}));
  EXPECT_EQ(p(0, 0), Rational(1, 2));
  EXPECT_EQ(p * p, p);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    std::vector<Subspace> tuple;
    for (int i = 0; i < 3; ++i) tuple.push_back(random::subspace(rng, 5, 2));
    EXPECT_TRUE(projector_sum_range_check(tuple));
  }
}

TEST(PathProbe, G54InStratumGapsShrink) {
  const auto g54 = make_g54();
  const auto report = path_probe(g54.algebra, g54.flag, FunctionalPath{xi_of({1, 0, 0, 0, 0}), xi_of({0, 1, 0, 0, 0})},
                                 Rational(0), dyadic_samples(Rational(0), 20));
  ASSERT_EQ(report.samples.size(), 20u);
  double previous = 2.0;
  for (const auto& s : report.samples) {
    const double t = to_double(s.t);
    EXPECT_NEAR(s.gap, std::abs(t) / std::sqrt(1 + t * t), 1e-9);
    EXPECT_LT(s.gap, previous);
    previous = s.gap;
    EXPECT_EQ(s.stratum.values(), (std::vector<std::size_t>{1, 2, 3, 2, 3}));
  }
  EXPECT_EQ(report.verdict, ProbeVerdict::gap_to_zero);
}

TEST(PathProbe, DiscontinuityWitnesses) {
  const auto g54 = make_g54();
  const auto r54 = path_probe(g54.algebra, g54.flag, FunctionalPath{xi_of({0, 0, 1, 0, 0}), xi_of({1, 0, 0, 0, 0})},
                              Rational(0), dyadic_samples(Rational(0), 20));
  for (const auto& s : r54.samples) EXPECT_NEAR(s.gap, 1.0, 1e-9);
  EXPECT_EQ(r54.reference, Subspace::coordinate(5, 4));
  EXPECT_EQ(r54.verdict, ProbeVerdict::bounded_away);

  const auto g615 = make_g615();
  const auto r615 = path_probe(g615.algebra, g615.flag,
                               FunctionalPath{xi_of({0, 0, 1, 0, 0, 0}), xi_of({0, 1, 0, 0, 0, 0})}, Rational(0),
                               dyadic_samples(Rational(0), 20));
  for (const auto& s : r615.samples) EXPECT_NEAR(s.gap, 1.0, 1e-9);
  EXPECT_EQ(r615.verdict, ProbeVerdict::bounded_away);
}

TEST(PathProbe, FormPathAndVerdicts) {
  // B(t) = t * (e1 ^ e2): selection jumps from Q^2 to span{e1}
  const FormPath path{SkewForm::zero(2), SkewForm::from_upper(2, {{0, 1, Rational(1)}})};
  const auto r = path_probe(path, Flag::standard(2), Rational(0), dyadic_samples(Rational(0), 5));
  for (const auto& s : r.samples) EXPECT_NEAR(s.gap, 1.0, 1e-12);
  EXPECT_EQ(classify_gaps({0.9, 0.2, 0.7}), ProbeVerdict::mixed);
  EXPECT_EQ(classify_gaps({0.3, 0.2, 0.1}), ProbeVerdict::gap_to_zero);
  EXPECT_EQ(classify_gaps({}), ProbeVerdict::mixed);
}

TEST(RankProbe, Examples) {
  const std::vector<Rational> scales{Rational(1), Rational(1, 10), Rational(1, 1000)};
  const auto zero = rank_semicontinuity_probe(SkewForm::zero(4), 20, scales, 1);
  EXPECT_EQ(zero.base_nullity, 4u);
  ASSERT_TRUE(zero.passing_scale.has_value());
  EXPECT_EQ(*zero.passing_scale, Rational(1));

  const SkewForm symplectic = SkewForm::from_upper(4, {{0, 2, Rational(1)}, {1, 3, Rational(1)}});
  const auto s = rank_semicontinuity_probe(symplectic, 20, scales, 2);
  EXPECT_EQ(s.base_nullity, 0u);
  EXPECT_FALSE(s.smallest_scale_failed);
  ASSERT_TRUE(s.passing_scale.has_value());

  const SkewForm g54 = SkewForm::from_upper(5, {{2, 3, Rational(-1)}});
  const auto r = rank_semicontinuity_probe(g54, 30, {Rational(1, 1000)}, 3);
  EXPECT_EQ(r.base_nullity, 3u);
  for (long change : r.outcomes.front().nullity_changes) EXPECT_TRUE(change == 0 || change == -2);
  EXPECT_FALSE(r.smallest_scale_failed);
}

TEST(RankProbe, DeterministicForSeed) {
  const SkewForm b = SkewForm::from_upper(3, {{0, 1, Rational(1)}});
  const auto a = rank_semicontinuity_probe(b, 10, {Rational(1, 2)}, 99);
  const auto c = rank_semicontinuity_probe(b, 10, {Rational(1, 2)}, 99);
  EXPECT_EQ(a.outcomes.front().nullity_changes, c.outcomes.front().nullity_changes);
}
