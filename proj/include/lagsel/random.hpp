#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "lagsel/matrix.hpp"
#include "lagsel/presymplectic.hpp"
#include "lagsel/subspace.hpp"

// Generators for randomized checks. Small entries keep exact arithmetic
// fast; sparse and low-rank modes push samples onto degenerate strata that
// dense sampling would almost never hit.
namespace lagsel::random {

template <class Rng>
long small_int(Rng& rng, long bound) {
  return std::uniform_int_distribution<long>(-bound, bound)(rng);
}

template <class Rng>
Rational rational(Rng& rng, long max_num = 5, long max_den = 3) {
  const long num = small_int(rng, max_num);
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  return Rational(num, den);
}

template <class Rng>
Rational nonzero_rational(Rng& rng, long max_num = 5, long max_den = 3) {
  Rational r = 0;
  while (r.is_zero()) {
    r = rational(rng, max_num, max_den);
  }
  return r;
}

template <class Rng>
bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

template <class Rng>
Vector vector(Rng& rng, std::size_t m, double zero_probability = 0.0) {
  Vector v(m);
  for (auto& x : v) {
    x = coin(rng, zero_probability) ? Rational(0) : rational(rng);
  }
  return v;
}

/// Random skew form in one of three modes: dense, sparse, or a sum of a few
/// wedge products u ^ v (rank at most twice the number of terms).
template <class Rng>
SkewForm skew_form(Rng& rng, std::size_t m) {
  Matrix a(m, m);
  const int mode = std::uniform_int_distribution<int>(0, 2)(rng);
  if (mode == 2) {
    const auto terms = std::uniform_int_distribution<std::size_t>(0, m / 2)(rng);
    for (std::size_t t = 0; t < terms; ++t) {
      const Vector u = vector(rng, m, 0.4);
      const Vector v = vector(rng, m, 0.4);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          a(i, j) += u[i] * v[j] - v[i] * u[j];
        }
      }
    }
  } else {
    const double zero_p = mode == 0 ? 0.1 : 0.7;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        a(i, j) = coin(rng, zero_p) ? Rational(0) : rational(rng);
        a(j, i) = -a(i, j);
      }
    }
  }
  return SkewForm(std::move(a));
}

/// Random complete flag: standard, a coordinate permutation, a permuted
/// unit-triangular basis, or a dense invertible basis.
template <class Rng>
Flag flag(Rng& rng, std::size_t m) {
  const int mode = std::uniform_int_distribution<int>(0, 3)(rng);
  if (mode == 0) {
    return Flag::standard(m);
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix c(m, m);
  if (mode == 1) {
    for (std::size_t j = 0; j < m; ++j) c(perm[j], j) = 1;
    return Flag(std::move(c));
  }
  if (mode == 2) {
    for (std::size_t j = 0; j < m; ++j) {
      c(perm[j], j) = 1;
      for (std::size_t i = j + 1; i < m; ++i) {
        c(perm[i], j) = coin(rng, 0.5) ? Rational(0) : rational(rng, 2, 2);
      }
    }
    return Flag(std::move(c));
  }
  while (true) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) c(i, j) = rational(rng, 3, 2);
    if (rank(c) == m) {
      return Flag(std::move(c));
    }
  }
}

/// Span of `generators` random vectors; may be smaller when they are dependent.
template <class Rng>
Subspace subspace(Rng& rng, std::size_t m, std::size_t generators) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < generators; ++i) {
    gens.push_back(vector(rng, m, 0.5));
  }
  return Subspace::span(m, gens);
}

}  // namespace lagsel::random
