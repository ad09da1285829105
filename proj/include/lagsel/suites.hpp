#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lagsel/lie.hpp"
#include "lagsel/presymplectic.hpp"
#include "lagsel/probe.hpp"
#include "lagsel/random.hpp"
#include "lagsel/schubert.hpp"

namespace lagsel::suites {

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  // first few failures

  bool passed() const noexcept { return failures == 0; }

  void record(bool ok, const std::string& witness) {
    ++trials;
    if (!ok) {
      ++failures;
      if (witnesses.size() < 5) witnesses.push_back(witness);
    }
  }
};

/// A labelled region of g* for the example algebras.
struct Region {
  std::string label;
  std::vector<std::size_t> signature;
  /// Samples a functional in the region.
  std::function<Functional(std::mt19937_64&)> sample;
};

namespace detail {

inline Functional sample_with(std::mt19937_64& rng, std::size_t m, const std::vector<int>& pattern) {
  // pattern per coordinate: 0 zero, 1 nonzero, 2 free
  Vector v(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int p = i < pattern.size() ? pattern[i] : 2;
    v[i] = p == 0 ? Rational(0) : p == 1 ? random::nonzero_rational(rng) : random::rational(rng);
  }
  return Functional{std::move(v)};
}

/// (a, b) != (0, 0) with a random choice of which coordinates vanish.
inline std::pair<int, int> not_both_zero(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    default: return {1, 1};
  }
}

}  // namespace detail

inline std::vector<Region> g54_regions() {
  using detail::sample_with;
  return {
      {"xi1 != 0", {1, 2, 3, 2, 3}, [](auto& rng) { return sample_with(rng, 5, {1}); }},
      {"xi1 = 0, (xi2, xi3) != 0", {1, 2, 3, 4, 3},
       [](auto& rng) {
         const auto [a, b] = detail::not_both_zero(rng);
         return sample_with(rng, 5, {0, a, b});
       }},
      {"xi1 = xi2 = xi3 = 0", {1, 2, 3, 4, 5}, [](auto& rng) { return sample_with(rng, 5, {0, 0, 0}); }},
  };
}

inline std::vector<Region> g615_regions() {
  using detail::sample_with;
  return {
      {"xi2 != 0", {1, 2, 3, 4, 3, 4}, [](auto& rng) { return sample_with(rng, 6, {2, 1}); }},
      {"xi2 = 0, (xi1, xi3) != 0", {1, 2, 3, 4, 5, 4},
       [](auto& rng) {
         const auto [a, b] = detail::not_both_zero(rng);
         return sample_with(rng, 6, {a, 0, b});
       }},
      {"xi1 = xi2 = xi3 = 0", {1, 2, 3, 4, 5, 6}, [](auto& rng) { return sample_with(rng, 6, {0, 0, 0}); }},
  };
}

/// Random lower-triangular matrix for the axb family.
inline Matrix random_axb_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = random::coin(rng, 0.3) ? Rational(0) : random::rational(rng);
  if (a.is_zero()) a(0, 0) = 1;
  return a;
}

/// Functional annihilating [g, g] when `on_annihilator`, generic otherwise.
inline Functional random_axb_functional(std::mt19937_64& rng, const BuiltinAlgebra& alg, bool on_annihilator) {
  const std::size_t m = alg.algebra.dim();
  const Subspace derived = alg.algebra.derived_algebra();
  if (on_annihilator) {
    // random combination of a basis of [g, g]^perp
    const Subspace ann = annihilator(derived);
    Vector v(m);
    for (const auto& row : ann.basis_vectors()) {
      const Rational c = random::rational(rng);
      for (std::size_t i = 0; i < m; ++i) v[i] += c * row[i];
    }
    return Functional{std::move(v)};
  }
  while (true) {
    Functional xi{random::vector(rng, m, 0.3)};
    if (!lagsel::is_zero(derived.basis() * xi.values)) return xi;
  }
}

/// Random filtration trials; every lemma check must pass and the selection
/// must be Lagrangian and contain N(B).
inline SuiteResult filtration_lemmas(std::uint64_t seed, std::size_t trials) {
  SuiteResult result{"filtration-lemmas", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
    const SkewForm b = random::skew_form(rng, m);
    const Flag f = random::flag(rng, m);
    const LemmaReport report = verify_filtration_lemmas(b, f);
    const CheckOutcome* bad = report.first_failure();
    result.record(bad == nullptr,
                  "trial " + std::to_string(t) + ": " + (bad ? bad->name + " " + bad->witness : std::string()));
  }
  return result;
}

/// Vergne polarizations and isotropy subalgebras of the example algebras
/// against their closed forms, plus the stratum tables.
inline SuiteResult example_oracles(std::uint64_t seed, std::size_t trials_per_region) {
  SuiteResult result{"example-oracles", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (const auto& [alg, regions] : {std::pair{make_g54(), g54_regions()}, std::pair{make_g615(), g615_regions()}}) {
    for (const auto& region : regions) {
      for (std::size_t t = 0; t < trials_per_region; ++t) {
        const Functional xi = region.sample(rng);
        const Subspace p = vergne_polarization(alg.algebra, alg.flag, xi);
        const bool ok = p == *polarization_oracle(alg, xi) &&
                        isotropy_subalgebra(alg.algebra, xi) == *isotropy_oracle(alg, xi) &&
                        stratum(alg.algebra, alg.flag, xi).values() == region.signature;
        result.record(ok, alg.name + " region " + region.label + " trial " + std::to_string(t));
      }
    }
  }
  for (std::size_t t = 0; t < trials_per_region; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const BuiltinAlgebra alg = make_axb(random_axb_matrix(rng, n));
    const bool on_ann = random::coin(rng, 0.3);
    const Functional xi = random_axb_functional(rng, alg, on_ann);
    const bool ok = vergne_polarization(alg.algebra, alg.flag, xi) == *polarization_oracle(alg, xi);
    result.record(ok, "axb n=" + std::to_string(n) + " trial " + std::to_string(t));
  }
  return result;
}

/// Subalgebra, subordination and dimension contract of p_alg on every builtin.
inline SuiteResult lie_contract(std::uint64_t seed, std::size_t trials) {
  SuiteResult result{"lie-contract", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<BuiltinAlgebra> algebras{make_g54(), make_g615(), make_heisenberg(1), make_heisenberg(2),
                                       make_axb(random_axb_matrix(rng, 3))};
  for (const auto& alg : algebras) {
    for (std::size_t t = 0; t < trials; ++t) {
      const Functional xi{random::vector(rng, alg.algebra.dim(), 0.4)};
      const Subspace p = vergne_polarization(alg.algebra, alg.flag, xi);
      const Subspace iso = isotropy_subalgebra(alg.algebra, xi);
      const bool ok = is_subalgebra(alg.algebra, p) && is_subordinate(alg.algebra, xi, p) && contains(p, iso) &&
                      2 * p.dim() == alg.algebra.dim() + iso.dim() && is_subalgebra(alg.algebra, iso);
      result.record(ok, alg.name + " trial " + std::to_string(t));
    }
  }
  return result;
}

/// Infinitesimal Casimir invariance and orbit parametrizations on g54 and g615.
inline SuiteResult casimir(std::uint64_t seed, std::size_t trials) {
  SuiteResult result{"casimir", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (const auto& alg : {make_g54(), make_g615()}) {
    const auto regions = alg.kind == BuiltinKind::g54 ? g54_regions() : g615_regions();
    for (std::size_t t = 0; t < trials; ++t) {
      const Functional xi{random::vector(rng, alg.algebra.dim(), 0.3)};
      result.record(casimir_invariance_check(alg.kind, xi), alg.name + " invariance trial " + std::to_string(t));

      const OrbitBranch branch = orbit_branch(alg.kind, xi);
      const std::vector<Rational> params =
          branch == OrbitBranch::point ? std::vector<Rational>{}
                                       : std::vector<Rational>{random::rational(rng), random::rational(rng)};
      const Functional eta = orbit_point(alg.kind, xi, params);
      const bool ok = casimir_value(alg.kind, eta) == casimir_value(alg.kind, xi) &&
                      stratum(alg.algebra, alg.flag, eta) == stratum(alg.algebra, alg.flag, xi);
      result.record(ok, alg.name + " orbit trial " + std::to_string(t));
    }
  }
  return result;
}

/// Range of a sum of orthogonal projectors equals the sum of their ranges.
inline SuiteResult projector_sum(std::uint64_t seed, std::size_t trials) {
  SuiteResult result{"projector-sum", 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::vector<Subspace> tuple;
    for (std::size_t i = 0; i < count; ++i) {
      tuple.push_back(random::subspace(rng, 5, std::uniform_int_distribution<std::size_t>(0, 3)(rng)));
    }
    result.record(projector_sum_range_check(tuple), "trial " + std::to_string(t));
  }
  return result;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"filtration-lemmas", "example-oracles", "lie-contract", "casimir",
                                              "projector-sum"};
  return names;
}

/// Runs the named suite; trials = 0 selects the suite default.
inline SuiteResult run(const std::string& name, std::uint64_t seed, std::size_t trials) {
  auto pick = [&](std::size_t fallback) { return trials == 0 ? fallback : trials; };
  if (name == "filtration-lemmas") return filtration_lemmas(seed, pick(1000));
  if (name == "example-oracles") return example_oracles(seed, pick(200));
  if (name == "lie-contract") return lie_contract(seed, pick(100));
  if (name == "casimir") return casimir(seed, pick(500));
  if (name == "projector-sum") return projector_sum(seed, pick(500));
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace lagsel::suites
