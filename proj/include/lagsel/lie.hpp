#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagsel/error.hpp"
#include "lagsel/matrix.hpp"
#include "lagsel/presymplectic.hpp"
#include "lagsel/schubert.hpp"
#include "lagsel/subspace.hpp"

namespace lagsel {

/// Finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed basis X_1..X_m. Construction validates antisymmetry and Jacobi.
class LieAlgebra {
 public:
  /// [X_i, X_j] = value for 0-based i < j.
  struct Bracket {
    std::size_t i;
    std::size_t j;
    Vector value;
  };

  LieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets, std::vector<std::string> labels = {})
      : dim_(dim), table_(dim * dim, Vector(dim)), labels_(std::move(labels)) {
    std::vector<bool> seen(dim * dim, false);
    for (const auto& br : brackets) {
      if (br.i >= br.j || br.j >= dim) {
        throw InvalidInput("bracket index pair (" + std::to_string(br.i + 1) + ", " +
                           std::to_string(br.j + 1) + ") must satisfy 1 <= i < j <= " +
                           std::to_string(dim));
      }
      if (br.value.size() != dim) {
        throw DimensionMismatch("bracket coefficient vector", dim, br.value.size());
      }
      if (seen[br.i * dim + br.j]) {
        throw InvalidInput("duplicate bracket (" + std::to_string(br.i + 1) + ", " +
                           std::to_string(br.j + 1) + ")");
      }
      seen[br.i * dim + br.j] = true;
      table_[br.i * dim + br.j] = br.value;
      Vector neg(dim);
      for (std::size_t c = 0; c < dim; ++c) {
        neg[c] = -br.value[c];
      }
      table_[br.j * dim + br.i] = std::move(neg);
    }
    if (labels_.empty()) {
      for (std::size_t i = 0; i < dim; ++i) {
        labels_.push_back("X" + std::to_string(i + 1));
      }
    } else if (labels_.size() != dim) {
      throw DimensionMismatch("basis labels", dim, labels_.size());
    }
    check_jacobi();
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// [X_i, X_j], 0-based.
  const Vector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vector bracket(const Vector& x, const Vector& y) const {
    detail::require_dim(dim_, x.size(), "bracket argument");
    detail::require_dim(dim_, y.size(), "bracket argument");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero() || i == j) {
          continue;
        }
        const Rational s = x[i] * y[j];
        const Vector& b = bracket_basis(i, j);
        for (std::size_t c = 0; c < dim_; ++c) {
          out[c] += s * b[c];
        }
      }
    }
    return out;
  }

  /// Nonzero brackets [X_i, X_j] with i < j.
  std::vector<Bracket> brackets() const {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        if (!lagsel::is_zero(bracket_basis(i, j))) {
          out.push_back({i, j, bracket_basis(i, j)});
        }
      }
    }
    return out;
  }

  /// [g, g].
  Subspace derived_algebra() const {
    std::vector<Vector> gens;
    for (const auto& br : brackets()) {
      gens.push_back(br.value);
    }
    return Subspace::span(dim_, gens);
  }

 private:
  Vector unit(std::size_t i) const {
    Vector v(dim_);
    v[i] = 1;
    return v;
  }

  void check_jacobi() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        for (std::size_t k = j + 1; k < dim_; ++k) {
          Vector total = bracket(unit(i), bracket_basis(j, k));
          const Vector b = bracket(unit(j), bracket_basis(k, i));
          const Vector c = bracket(unit(k), bracket_basis(i, j));
          for (std::size_t t = 0; t < dim_; ++t) {
            total[t] += b[t] + c[t];
          }
          if (!lagsel::is_zero(total)) {
            throw JacobiViolation({i, j, k});
          }
        }
      }
    }
  }

  std::size_t dim_;
  std::vector<Vector> table_;
  std::vector<std::string> labels_;
};

/// A linear functional xi on the algebra, xi_j = <xi, X_j>.
struct Functional {
  Vector values;

  std::size_t dim() const noexcept { return values.size(); }
  const Rational& operator[](std::size_t j) const { return values[j]; }
  friend bool operator==(const Functional&, const Functional&) = default;
};

/// True iff [g, V_j] is contained in V_j for every flag step.
inline bool verify_jordan_holder(const LieAlgebra& lie, const Flag& flag) {
  detail::require_dim(lie.dim(), flag.dim(), "Jordan-Holder check");
  for (std::size_t j = 1; j <= flag.dim(); ++j) {
    const Subspace& step = flag.step(j);
    const Vector v = flag.column(j - 1);
    for (std::size_t i = 0; i < lie.dim(); ++i) {
      Vector x(lie.dim());
      x[i] = 1;
      // V_j = V_{j-1} + Q v and V_{j-1} was already checked stable.
      if (!step.contains(lie.bracket(x, v))) {
        return false;
      }
    }
  }
  return true;
}

/// B_xi(x, y) = <xi, [x, y]>.
inline SkewForm coadjoint_form(const LieAlgebra& lie, const Functional& xi) {
  detail::require_dim(lie.dim(), xi.dim(), "functional");
  const std::size_t m = lie.dim();
  Matrix b(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      b(i, j) = dot(xi.values, lie.bracket_basis(i, j));
      b(j, i) = -b(i, j);
    }
  }
  return SkewForm(std::move(b));
}

/// g(xi) = N(B_xi).
inline Subspace isotropy_subalgebra(const LieAlgebra& lie, const Functional& xi) {
  return null_space(coadjoint_form(lie, xi));
}

inline bool is_subalgebra(const LieAlgebra& lie, const Subspace& s) {
  const auto basis = s.basis_vectors();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (!s.contains(lie.bracket(basis[a], basis[b]))) {
        return false;
      }
    }
  }
  return true;
}

/// <xi, [s, s]> = 0.
inline bool is_subordinate(const LieAlgebra& lie, const Functional& xi, const Subspace& s) {
  return is_isotropic(coadjoint_form(lie, xi), s);
}

inline void require_jordan_holder(const LieAlgebra& lie, const Flag& flag) {
  if (!verify_jordan_holder(lie, flag)) {
    throw NotJordanHolder("flag is not a Jordan-Holder sequence of ideals");
  }
}

/// p_alg(xi) = g_1(xi|g_1) + ... + g_m(xi) for a Jordan-Holder flag.
inline Subspace vergne_polarization(const LieAlgebra& lie, const Flag& flag, const Functional& xi) {
  require_jordan_holder(lie, flag);
  return vergne_select(coadjoint_form(lie, xi), flag);
}

/// (dim g_j(xi|g_j))_j, the label of the set Xi_k containing xi.
inline SignatureVector stratum(const LieAlgebra& lie, const Flag& flag, const Functional& xi) {
  require_jordan_holder(lie, flag);
  return signature_vector(coadjoint_form(lie, xi), flag);
}

enum class BuiltinKind { g54, g615, heisenberg, axb };

/// One of the worked example algebras, with its standard Jordan-Holder flag.
struct BuiltinAlgebra {
  BuiltinKind kind;
  std::string name;
  LieAlgebra algebra;
  Flag flag;
  /// ad(X_m) restricted to the hyperplane ideal; axb only.
  std::optional<Matrix> axb_matrix;
};

namespace detail {

inline Vector basis_vector(std::size_t m, std::size_t one_based) {
  Vector v(m);
  v[one_based - 1] = 1;
  return v;
}

/// [X_a, X_b] = X_c with 1-based labels and a < b; sign flips when a > b.
inline LieAlgebra::Bracket unit_bracket(std::size_t m, std::size_t a, std::size_t b, std::size_t c) {
  Vector v = basis_vector(m, c);
  if (a > b) {
    std::swap(a, b);
    v[c - 1] = -1;
  }
  return {a - 1, b - 1, std::move(v)};
}

}  // namespace detail

/// g_{5,4}: [X5,X4] = X3, [X5,X3] = X2, [X4,X3] = X1.
inline BuiltinAlgebra make_g54() {
  using detail::unit_bracket;
  LieAlgebra lie(5, {unit_bracket(5, 5, 4, 3), unit_bracket(5, 5, 3, 2), unit_bracket(5, 4, 3, 1)});
  BuiltinAlgebra out{BuiltinKind::g54, "g54", std::move(lie), Flag::standard(5), std::nullopt};
  require_jordan_holder(out.algebra, out.flag);
  return out;
}

/// g_{6,15}: [X6,X5] = X3, [X6,X4] = X1, [X5,X4] = X2.
inline BuiltinAlgebra make_g615() {
  using detail::unit_bracket;
  LieAlgebra lie(6, {unit_bracket(6, 6, 5, 3), unit_bracket(6, 6, 4, 1), unit_bracket(6, 5, 4, 2)});
  BuiltinAlgebra out{BuiltinKind::g615, "g615", std::move(lie), Flag::standard(6), std::nullopt};
  require_jordan_holder(out.algebra, out.flag);
  return out;
}

/// Heisenberg algebra of dimension 2n + 1 with center X1 and [X_{2i}, X_{2i+1}] = X1.
inline BuiltinAlgebra make_heisenberg(std::size_t n) {
  if (n == 0) {
    throw InvalidInput("heisenberg algebra needs n >= 1");
  }
  const std::size_t m = 2 * n + 1;
  std::vector<LieAlgebra::Bracket> brackets;
  for (std::size_t i = 1; i <= n; ++i) {
    brackets.push_back(detail::unit_bracket(m, 2 * i, 2 * i + 1, 1));
  }
  BuiltinAlgebra out{BuiltinKind::heisenberg, "heisenberg:" + std::to_string(n),
                     LieAlgebra(m, brackets), Flag::standard(m), std::nullopt};
  require_jordan_holder(out.algebra, out.flag);
  return out;
}

/// Abelian hyperplane ideal a = span{X1..X_{m-1}} extended by X_m with
/// [X_m, X_j] = sum_i A(j, i) X_i, i.e. row j of A holds the image of X_j.
/// The standard flag is Jordan-Holder exactly when A is lower triangular.
inline BuiltinAlgebra make_axb(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InvalidInput("axb matrix must be square and nonempty");
  }
  const std::size_t m = a.rows() + 1;
  std::vector<LieAlgebra::Bracket> brackets;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    Vector image(m);
    bool nonzero = false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      image[i] = -a(j, i);  // stored as [X_j, X_m] = -[X_m, X_j]
      nonzero = nonzero || !image[i].is_zero();
    }
    if (nonzero) {
      brackets.push_back({j, m - 1, std::move(image)});
    }
  }
  BuiltinAlgebra out{BuiltinKind::axb, "axb", LieAlgebra(m, brackets), Flag::standard(m), a};
  if (!verify_jordan_holder(out.algebra, out.flag)) {
    throw NotJordanHolder("axb matrix is not lower triangular: standard flag is not Jordan-Holder");
  }
  return out;
}

/// Closed-form Vergne polarization for g54, g615 and axb; nullopt for other kinds.
inline std::optional<Subspace> polarization_oracle(const BuiltinAlgebra& alg, const Functional& xi) {
  using detail::basis_vector;
  const std::size_t m = alg.algebra.dim();
  detail::require_dim(m, xi.dim(), "functional");
  // off [g, g]^perp only; the form vanishes identically on it
  auto on_annihilator = [&] { return xi[0].is_zero() && xi[1].is_zero() && xi[2].is_zero(); };
  switch (alg.kind) {
    case BuiltinKind::g54: {
      if (on_annihilator()) return Subspace::full(5);
      std::vector<Vector> gens{basis_vector(5, 1), basis_vector(5, 2), basis_vector(5, 3)};
      if (!xi[0].is_zero()) {
        gens.push_back(Vector{0, 0, 0, -xi[1], xi[0]});
      } else {
        gens.push_back(basis_vector(5, 4));
      }
      return Subspace::span(5, gens);
    }
    case BuiltinKind::g615: {
      if (on_annihilator()) return Subspace::full(6);
      std::vector<Vector> gens{basis_vector(6, 1), basis_vector(6, 2), basis_vector(6, 3),
                               basis_vector(6, 4)};
      if (!xi[1].is_zero()) {
        gens.push_back(Vector{0, 0, 0, 0, -xi[0], xi[1]});
      } else {
        gens.push_back(basis_vector(6, 5));
      }
      return Subspace::span(6, gens);
    }
    case BuiltinKind::axb: {
      const bool annihilates_derived = lagsel::is_zero(alg.algebra.derived_algebra().basis() * xi.values);
      return annihilates_derived ? Subspace::full(m) : Subspace::coordinate(m, m - 1);
    }
    case BuiltinKind::heisenberg:
      return std::nullopt;
  }
  return std::nullopt;
}

/// Closed-form isotropy subalgebra for g54 and g615: the center plus the line
/// through Y(xi restricted to [g, g]) off [g, g]^perp, all of g on it.
inline std::optional<Subspace> isotropy_oracle(const BuiltinAlgebra& alg, const Functional& xi) {
  using detail::basis_vector;
  const std::size_t m = alg.algebra.dim();
  detail::require_dim(m, xi.dim(), "functional");
  const bool on_annihilator = xi[0].is_zero() && xi[1].is_zero() && xi[2].is_zero();
  switch (alg.kind) {
    case BuiltinKind::g54:
      if (on_annihilator) {
        return Subspace::full(5);
      }
      // Y(eta) = eta3 X3 - eta2 X4 + eta1 X5
      return Subspace::span(5, {basis_vector(5, 1), basis_vector(5, 2), Vector{0, 0, xi[2], -xi[1], xi[0]}});
    case BuiltinKind::g615:
      if (on_annihilator) {
        return Subspace::full(6);
      }
      // Y(eta) = eta3 X4 - eta1 X5 + eta2 X6
      return Subspace::span(6, {basis_vector(6, 1), basis_vector(6, 2), basis_vector(6, 3),
                                Vector{0, 0, 0, xi[2], -xi[0], xi[1]}});
    default:
      return std::nullopt;
  }
}

namespace detail {

inline void require_casimir_kind(BuiltinKind kind) {
  if (kind != BuiltinKind::g54 && kind != BuiltinKind::g615) {
    throw InvalidInput("Casimir function available only for g54 and g615");
  }
}

inline std::size_t casimir_dim(BuiltinKind kind) { return kind == BuiltinKind::g54 ? 5 : 6; }

}  // namespace detail

/// g54: 2 xi1 xi5 - 2 xi2 xi4 + xi3^2.  g615: xi2 xi6 + xi3 xi4 - xi1 xi5.
inline Rational casimir_value(BuiltinKind kind, const Functional& xi) {
  detail::require_casimir_kind(kind);
  detail::require_dim(detail::casimir_dim(kind), xi.dim(), "functional");
  if (kind == BuiltinKind::g54) {
    return 2 * xi[0] * xi[4] - 2 * xi[1] * xi[3] + xi[2] * xi[2];
  }
  return xi[1] * xi[5] + xi[2] * xi[3] - xi[0] * xi[4];
}

/// dC at xi, read as an element of g through the fixed basis.
inline Vector casimir_gradient(BuiltinKind kind, const Functional& xi) {
  detail::require_casimir_kind(kind);
  detail::require_dim(detail::casimir_dim(kind), xi.dim(), "functional");
  if (kind == BuiltinKind::g54) {
    return {2 * xi[4], -2 * xi[3], 2 * xi[2], -2 * xi[1], 2 * xi[0]};
  }
  return {-xi[4], xi[5], xi[3], xi[2], -xi[0], xi[1]};
}

/// Infinitesimal orbit invariance: <xi, [grad C(xi), X_j]> = 0 for every j.
inline bool casimir_invariance_check(BuiltinKind kind, const Functional& xi) {
  const BuiltinAlgebra alg = kind == BuiltinKind::g54 ? make_g54() : make_g615();
  const Vector grad = casimir_gradient(kind, xi);
  for (std::size_t j = 1; j <= alg.algebra.dim(); ++j) {
    if (!dot(xi.values, alg.algebra.bracket(grad, detail::basis_vector(alg.algebra.dim(), j))).is_zero()) {
      return false;
    }
  }
  return true;
}

/// Cases of the coadjoint orbit parametrization, selected by the leading
/// coordinates of xi (g54 keys on xi1, xi2, xi3; g615 on xi2, xi1, xi3).
enum class OrbitBranch { first, second, third, point };

inline OrbitBranch orbit_branch(BuiltinKind kind, const Functional& xi) {
  detail::require_casimir_kind(kind);
  detail::require_dim(detail::casimir_dim(kind), xi.dim(), "functional");
  const bool z1 = xi[0].is_zero();
  const bool z2 = xi[1].is_zero();
  const bool z3 = xi[2].is_zero();
  if (kind == BuiltinKind::g54) {
    if (!z1) return OrbitBranch::first;
    if (!z2) return OrbitBranch::second;
  } else {
    if (!z2) return OrbitBranch::first;
    if (!z1) return OrbitBranch::second;
  }
  return z3 ? OrbitBranch::point : OrbitBranch::third;
}

/// Point of the coadjoint orbit of xi with free coordinates `params`:
///   g54   first (y3, y4), second (y3, y5), third (y4, y5);
///   g615  first (y4, y5), second (y4, y6), third (y5, y6);
/// the single-point orbit takes no parameters. Throws InvalidInput when
/// `branch` does not match xi or the parameter count is wrong.
inline Functional orbit_point(BuiltinKind kind, const Functional& xi, const std::vector<Rational>& params,
                              std::optional<OrbitBranch> branch = std::nullopt) {
  const OrbitBranch actual = orbit_branch(kind, xi);
  if (branch && *branch != actual) {
    throw InvalidInput("orbit parametrization case guard violated for this functional");
  }
  const std::size_t expected_params = actual == OrbitBranch::point ? 0 : 2;
  if (params.size() != expected_params) {
    throw DimensionMismatch("orbit parameters", expected_params, params.size());
  }
  const Rational c = casimir_value(kind, xi);
  Vector v = xi.values;
  if (kind == BuiltinKind::g54) {
    switch (actual) {
      case OrbitBranch::first: {
        const Rational &y3 = params[0], &y4 = params[1];
        v[2] = y3;
        v[3] = y4;
        v[4] = (c + 2 * xi[1] * y4 - y3 * y3) / (2 * xi[0]);
        break;
      }
      case OrbitBranch::second: {
        const Rational &y3 = params[0], &y5 = params[1];
        v[2] = y3;
        v[3] = (-c + y3 * y3) / (2 * xi[1]);
        v[4] = y5;
        break;
      }
      case OrbitBranch::third:
        v[3] = params[0];
        v[4] = params[1];
        break;
      case OrbitBranch::point:
        break;
    }
  } else {
    switch (actual) {
      case OrbitBranch::first: {
        const Rational &y4 = params[0], &y5 = params[1];
        v[3] = y4;
        v[4] = y5;
        v[5] = (c + xi[0] * y5 - xi[2] * y4) / xi[1];
        break;
      }
      case OrbitBranch::second: {
        const Rational &y4 = params[0], &y6 = params[1];
        v[3] = y4;
        v[4] = (-c + xi[2] * y4) / xi[0];
        v[5] = y6;
        break;
      }
      case OrbitBranch::third:
        v[3] = c / xi[2];
        v[4] = params[0];
        v[5] = params[1];
        break;
      case OrbitBranch::point:
        break;
    }
  }
  return Functional{std::move(v)};
}

}  // namespace lagsel
