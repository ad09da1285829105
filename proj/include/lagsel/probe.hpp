#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lagsel/error.hpp"
#include "lagsel/lie.hpp"
#include "lagsel/matrix.hpp"
#include "lagsel/presymplectic.hpp"
#include "lagsel/schubert.hpp"
#include "lagsel/subspace.hpp"

namespace lagsel {

/// Dense square matrix of doubles, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix d(x.n_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) {
      d.a_[k] = x.a_[k] - y.a_[k];
    }
    return d;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Double-precision subspace with an orthonormal column basis.
class FloatSubspace {
 public:
  FloatSubspace(std::size_t ambient_dim, std::vector<std::vector<double>> columns)
      : ambient_dim_(ambient_dim) {
    // Modified Gram-Schmidt, two passes.
    for (auto& v : columns) {
      if (v.size() != ambient_dim) {
        throw DimensionMismatch("float subspace column", ambient_dim, v.size());
      }
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis_) {
          double proj = 0.0;
          for (std::size_t i = 0; i < ambient_dim; ++i) proj += q[i] * v[i];
          for (std::size_t i = 0; i < ambient_dim; ++i) v[i] -= proj * q[i];
        }
      }
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      if (norm < 1e-300) {
        throw InvalidInput("float subspace columns are linearly dependent");
      }
      for (double& x : v) x /= norm;
      basis_.push_back(std::move(v));
    }
  }

  explicit FloatSubspace(const Subspace& s) : FloatSubspace(s.ambient_dim(), columns_of(s)) {}

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<std::vector<double>>& basis() const noexcept { return basis_; }

  DenseMatrix projector() const {
    DenseMatrix p(ambient_dim_);
    for (const auto& q : basis_) {
      for (std::size_t i = 0; i < ambient_dim_; ++i) {
        for (std::size_t j = 0; j < ambient_dim_; ++j) {
          p(i, j) += q[i] * q[j];
        }
      }
    }
    return p;
  }

 private:
  static std::vector<std::vector<double>> columns_of(const Subspace& s) {
    std::vector<std::vector<double>> cols;
    for (std::size_t r = 0; r < s.dim(); ++r) {
      std::vector<double> v(s.ambient_dim());
      for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
        v[c] = to_double(s.basis()(r, c));
      }
      cols.push_back(std::move(v));
    }
    return cols;
  }

  std::size_t ambient_dim_;
  std::vector<std::vector<double>> basis_;
};

/// Orthogonal projector onto S.
inline DenseMatrix projector(const Subspace& s) { return FloatSubspace(s).projector(); }

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, in ascending order.
inline std::vector<double> symmetric_eigenvalues(DenseMatrix a, double tolerance = 1e-12,
                                                 int max_sweeps = 100) {
  const std::size_t n = a.size();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  for (int sweep = 0; sweep < max_sweeps && off_norm() > tolerance; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) {
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

inline double spectral_norm_symmetric(const DenseMatrix& a) {
  double best = 0.0;
  for (double e : symmetric_eigenvalues(a)) best = std::max(best, std::abs(e));
  return best;
}

/// ||P_1 - P_2||_2: the sine of the largest principal angle for equal
/// dimensions, and 1 whenever the dimensions differ.
inline double gap(const FloatSubspace& w1, const FloatSubspace& w2) {
  if (w1.ambient_dim() != w2.ambient_dim()) {
    throw DimensionMismatch("gap metric", w1.ambient_dim(), w2.ambient_dim());
  }
  return spectral_norm_symmetric(w1.projector() - w2.projector());
}

inline double gap(const Subspace& w1, const Subspace& w2) {
  if (w1.ambient_dim() != w2.ambient_dim()) {
    throw DimensionMismatch("gap metric", w1.ambient_dim(), w2.ambient_dim());
  }
  return gap(FloatSubspace(w1), FloatSubspace(w2));
}

/// Exact orthogonal projector A (A^T A)^{-1} A^T onto S, with A the basis columns.
inline Matrix exact_projector(const Subspace& s) {
  if (s.dim() == 0) {
    return Matrix(s.ambient_dim(), s.ambient_dim());
  }
  const Matrix a = transpose(s.basis());
  return a * inverse(s.basis() * a) * s.basis();
}

/// Checks Ran(P_1 + ... + P_n) = S_1 + ... + S_n exactly.
inline bool projector_sum_range_check(const std::vector<Subspace>& subspaces) {
  if (subspaces.empty()) {
    return true;
  }
  const std::size_t m = subspaces.front().ambient_dim();
  Matrix total(m, m);
  Subspace exact_sum = Subspace::zero(m);
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != m) {
      throw DimensionMismatch("projector sum", m, s.ambient_dim());
    }
    total = total + exact_projector(s);
    exact_sum = sum(exact_sum, s);
  }
  return Subspace::row_space(transpose(total)) == exact_sum;
}

enum class ProbeVerdict { gap_to_zero, bounded_away, mixed };

inline std::string to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::gap_to_zero: return "gap-to-zero";
    case ProbeVerdict::bounded_away: return "bounded-away";
    case ProbeVerdict::mixed: return "mixed";
  }
  return "mixed";
}

struct ProbeSample {
  Rational t;
  double gap = 0.0;
  Subspace selection;
  SignatureVector stratum;
  JumpSet cell;
};

struct PathProbeReport {
  Rational t_star;
  Subspace reference;
  SignatureVector reference_stratum;
  JumpSet reference_cell;
  std::vector<ProbeSample> samples;
  ProbeVerdict verdict = ProbeVerdict::mixed;
};

/// Gaps at or above this value count as bounded away from zero.
inline constexpr double kBoundedAwayThreshold = 0.5;

/// Classifies gaps ordered from the farthest sample to the closest one.
inline ProbeVerdict classify_gaps(const std::vector<double>& gaps_by_distance) {
  if (gaps_by_distance.empty()) {
    return ProbeVerdict::mixed;
  }
  if (std::all_of(gaps_by_distance.begin(), gaps_by_distance.end(),
                  [](double g) { return g >= kBoundedAwayThreshold; })) {
    return ProbeVerdict::bounded_away;
  }
  bool monotone = true;
  for (std::size_t i = 1; i < gaps_by_distance.size(); ++i) {
    monotone = monotone && gaps_by_distance[i] <= gaps_by_distance[i - 1] + 1e-12;
  }
  if (monotone && gaps_by_distance.back() < kBoundedAwayThreshold) {
    return ProbeVerdict::gap_to_zero;
  }
  return ProbeVerdict::mixed;
}

/// Evaluates the exact Vergne selection along a path of forms t -> B(t) and
/// records the gap to the selection at t_star for every sample. Reports
/// evidence only; nothing is asserted.
template <class FormAt>
PathProbeReport path_probe(FormAt&& form_at, const Flag& flag, const Rational& t_star,
                           const std::vector<Rational>& samples) {
  const SkewForm reference_form = form_at(t_star);
  const Subspace reference = vergne_select(reference_form, flag);
  const FloatSubspace reference_float(reference);
  PathProbeReport report{t_star,
                         reference,
                         signature_vector(reference_form, flag),
                         jump_indices(reference, flag),
                         {},
                         ProbeVerdict::mixed};
  for (const auto& t : samples) {
    const SkewForm form = form_at(t);
    Subspace selection = vergne_select(form, flag);
    const double g = gap(FloatSubspace(selection), reference_float);
    JumpSet cell = jump_indices(selection, flag);
    report.samples.push_back({t, g, std::move(selection), signature_vector(form, flag), std::move(cell)});
  }
  std::vector<std::size_t> order(report.samples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return boost::multiprecision::abs(report.samples[a].t - t_star) >
           boost::multiprecision::abs(report.samples[b].t - t_star);
  });
  std::vector<double> gaps;
  for (auto i : order) gaps.push_back(report.samples[i].gap);
  report.verdict = classify_gaps(gaps);
  return report;
}

/// Affine path xi(t) = base + t * direction in g*.
struct FunctionalPath {
  Functional base;
  Functional direction;

  Functional at(const Rational& t) const {
    Vector v = base.values;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += t * direction.values[i];
    return Functional{std::move(v)};
  }
};

/// Affine path of forms B(t) = base + t * direction.
struct FormPath {
  SkewForm base;
  SkewForm direction;

  SkewForm at(const Rational& t) const { return base + t * direction; }
};

inline PathProbeReport path_probe(const LieAlgebra& lie, const Flag& flag, const FunctionalPath& path,
                                  const Rational& t_star, const std::vector<Rational>& samples) {
  require_jordan_holder(lie, flag);
  detail::require_dim(lie.dim(), path.base.dim(), "path base");
  detail::require_dim(lie.dim(), path.direction.dim(), "path direction");
  return path_probe([&](const Rational& t) { return coadjoint_form(lie, path.at(t)); }, flag, t_star,
                    samples);
}

inline PathProbeReport path_probe(const FormPath& path, const Flag& flag, const Rational& t_star,
                                  const std::vector<Rational>& samples) {
  return path_probe([&](const Rational& t) { return path.at(t); }, flag, t_star, samples);
}

/// t_i = t_star + 2^{-i} for i = 1..count.
inline std::vector<Rational> dyadic_samples(const Rational& t_star, std::size_t count) {
  std::vector<Rational> out;
  Rational step = 1;
  for (std::size_t i = 1; i <= count; ++i) {
    step /= 2;
    out.push_back(t_star + step);
  }
  return out;
}

/// Uniform rational in [-scale, scale] with denominator dividing `resolution`.
template <class Rng>
Rational bounded_rational(Rng& rng, const Rational& scale, long resolution) {
  std::uniform_int_distribution<long> dist(-resolution, resolution);
  return scale * Rational(dist(rng), resolution);
}

struct ScaleOutcome {
  Rational scale;
  std::size_t trials = 0;
  /// dim N(B') - dim N(B) for each trial, in trial order.
  std::vector<long> nullity_changes;
  bool all_within = true;
};

struct RankProbeReport {
  std::size_t base_nullity = 0;
  std::vector<ScaleOutcome> outcomes;
  /// Largest scale at which every trial kept dim N(B') <= dim N(B).
  std::optional<Rational> passing_scale;
  /// Set when even the smallest scale saw an increase.
  bool smallest_scale_failed = false;
};

/// Perturbs B by random skew noise with entries bounded by each scale and
/// records the nullity change. Scales should be given in decreasing order.
inline RankProbeReport rank_semicontinuity_probe(const SkewForm& b, std::size_t trials,
                                                 const std::vector<Rational>& scales, std::uint64_t seed,
                                                 long resolution = 1000) {
  RankProbeReport report;
  report.base_nullity = null_space(b).dim();
  const std::size_t m = b.dim();
  std::mt19937_64 rng(seed);
  for (const auto& scale : scales) {
    ScaleOutcome outcome{scale, trials, {}, true};
    for (std::size_t t = 0; t < trials; ++t) {
      Matrix noise(m, m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          noise(i, j) = bounded_rational(rng, scale, resolution);
          noise(j, i) = -noise(i, j);
        }
      }
      const long change = static_cast<long>(null_space(b + SkewForm(std::move(noise))).dim()) -
                          static_cast<long>(report.base_nullity);
      outcome.nullity_changes.push_back(change);
      outcome.all_within = outcome.all_within && change <= 0;
    }
    if (outcome.all_within && (!report.passing_scale || scale > *report.passing_scale)) {
      report.passing_scale = scale;
    }
    report.outcomes.push_back(std::move(outcome));
  }
  if (!report.outcomes.empty()) {
    auto smallest = std::min_element(report.outcomes.begin(), report.outcomes.end(),
                                     [](const ScaleOutcome& x, const ScaleOutcome& y) { return x.scale < y.scale; });
    report.smallest_scale_failed = !smallest->all_within;
  }
  return report;
}

}  // namespace lagsel
