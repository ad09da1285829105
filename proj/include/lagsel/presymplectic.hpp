#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lagsel/error.hpp"
#include "lagsel/matrix.hpp"
#include "lagsel/subspace.hpp"

namespace lagsel {

/// A skew-symmetric bilinear form B on Q^m, stored as its Gram matrix
/// entry(i, j) = B(e_i, e_j).
class SkewForm {
 public:
  explicit SkewForm(Matrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
      throw InvalidInput("skew form matrix must be square, got " + std::to_string(matrix_.rows()) +
                         "x" + std::to_string(matrix_.cols()));
    }
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!matrix_(i, i).is_zero()) {
        throw InvalidInput("skew form has nonzero diagonal entry at " + std::to_string(i + 1));
      }
      for (std::size_t j = i + 1; j < dim(); ++j) {
        if (matrix_(i, j) != -matrix_(j, i)) {
          throw InvalidInput("matrix is not skew-symmetric at (" + std::to_string(i + 1) + ", " +
                             std::to_string(j + 1) + ")");
        }
      }
    }
  }

  static SkewForm zero(std::size_t m) { return SkewForm(Matrix(m, m)); }

  /// Form with B(e_i, e_j) = value and B(e_j, e_i) = -value for each (i, j, value), 0-based.
  static SkewForm from_upper(std::size_t m,
                             const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& upper) {
    Matrix a(m, m);
    for (const auto& [i, j, value] : upper) {
      if (i >= j || j >= m) {
        throw InvalidInput("upper-triangle entry (" + std::to_string(i + 1) + ", " +
                           std::to_string(j + 1) + ") must satisfy 1 <= i < j <= " +
                           std::to_string(m));
      }
      a(i, j) = value;
      a(j, i) = -value;
    }
    return SkewForm(std::move(a));
  }

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }

  Rational operator()(const Vector& x, const Vector& y) const { return dot(x, matrix_ * y); }

  friend bool operator==(const SkewForm&, const SkewForm&) = default;

 private:
  Matrix matrix_;
};

inline SkewForm operator+(const SkewForm& a, const SkewForm& b) { return SkewForm(a.matrix() + b.matrix()); }
inline SkewForm operator*(const Rational& s, const SkewForm& a) { return SkewForm(s * a.matrix()); }

/// Complete flag {0} = V_0 < V_1 < ... < V_m = Q^m, where V_j is spanned by
/// the first j columns of an invertible basis matrix.
class Flag {
 public:
  explicit Flag(Matrix basis_matrix) : basis_(std::move(basis_matrix)) {
    if (basis_.rows() != basis_.cols()) {
      throw InvalidInput("flag basis matrix must be square");
    }
    if (rank(basis_) != basis_.rows()) {
      throw InvalidInput("flag basis matrix is singular");
    }
    steps_.reserve(dim() + 1);
    for (std::size_t j = 0; j <= dim(); ++j) {
      steps_.push_back(Subspace::row_space(transpose(leading_columns(basis_, j))));
    }
  }

  static Flag standard(std::size_t m) { return Flag(Matrix::identity(m)); }

  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis_matrix() const noexcept { return basis_; }
  Vector column(std::size_t j) const { return basis_.column(j); }

  /// V_j for 0 <= j <= m.
  const Subspace& step(std::size_t j) const {
    if (j > dim()) {
      throw InvalidInput("flag step " + std::to_string(j) + " out of range 0.." + std::to_string(dim()));
    }
    return steps_[j];
  }

  friend bool operator==(const Flag& a, const Flag& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
  std::vector<Subspace> steps_;
};

/// (dim N(B_1), ..., dim N(B_m)) for the restrictions B_j of B to the flag steps.
/// Admissible vectors satisfy 0 <= k_j <= j and k_j = j (mod 2).
class SignatureVector {
 public:
  /// Throws InvalidInput unless k is admissible.
  explicit SignatureVector(std::vector<std::size_t> k) : k_(std::move(k)) {
    for (std::size_t j = 1; j <= k_.size(); ++j) {
      const std::size_t kj = k_[j - 1];
      if (kj > j || (kj % 2) != (j % 2)) {
        throw InvalidInput("signature entry k_" + std::to_string(j) + " = " + std::to_string(kj) +
                           " is not admissible");
      }
    }
  }

  std::size_t dim() const noexcept { return k_.size(); }
  /// k_j for 1 <= j <= m.
  std::size_t at(std::size_t j) const { return k_.at(j - 1); }
  const std::vector<std::size_t>& values() const noexcept { return k_; }

  friend bool operator==(const SignatureVector&, const SignatureVector&) = default;

 private:
  std::vector<std::size_t> k_;
};

namespace detail {

inline void require_dim(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw DimensionMismatch(what, expected, actual);
  }
}

}  // namespace detail

/// S^{perp_B} = {w : B(s, w) = 0 for all s in S}.
inline Subspace b_perp(const SkewForm& b, const Subspace& s) {
  detail::require_dim(b.dim(), s.ambient_dim(), "B-orthogonal complement");
  return kernel(s.basis() * b.matrix());
}

/// N(B) = V^{perp_B}, the radical of B.
inline Subspace null_space(const SkewForm& b) { return kernel(b.matrix()); }

/// B_j = B restricted to V_j x V_j, in coordinates of the first j flag vectors.
inline SkewForm restrict(const SkewForm& b, const Flag& flag, std::size_t j) {
  detail::require_dim(b.dim(), flag.dim(), "flag restriction");
  if (j < 1 || j > b.dim()) {
    throw InvalidInput("restriction index " + std::to_string(j) + " out of range 1.." +
                       std::to_string(b.dim()));
  }
  const Matrix c = leading_columns(flag.basis_matrix(), j);
  return SkewForm(transpose(c) * b.matrix() * c);
}

/// Image in Q^m of a subspace of Q^j given in the coordinates of the first j flag vectors.
inline Subspace embed(const Flag& flag, std::size_t j, const Subspace& local) {
  detail::require_dim(j, local.ambient_dim(), "flag embedding");
  const Matrix c = leading_columns(flag.basis_matrix(), j);
  return Subspace::row_space(local.basis() * transpose(c));
}

/// p(B) = N(B_1) + ... + N(B_m), each N(B_j) embedded back into Q^m.
inline Subspace vergne_select(const SkewForm& b, const Flag& flag) {
  detail::require_dim(b.dim(), flag.dim(), "Vergne selection");
  Subspace acc = Subspace::zero(b.dim());
  for (std::size_t j = 1; j <= b.dim(); ++j) {
    acc = sum(acc, embed(flag, j, null_space(restrict(b, flag, j))));
  }
  return acc;
}

inline SignatureVector signature_vector(const SkewForm& b, const Flag& flag) {
  detail::require_dim(b.dim(), flag.dim(), "signature vector");
  std::vector<std::size_t> k(b.dim());
  for (std::size_t j = 1; j <= b.dim(); ++j) {
    k[j - 1] = null_space(restrict(b, flag, j)).dim();
  }
  return SignatureVector(std::move(k));
}

inline bool is_isotropic(const SkewForm& b, const Subspace& w) {
  detail::require_dim(b.dim(), w.ambient_dim(), "isotropy test");
  const Matrix& basis = w.basis();
  return (basis * b.matrix() * transpose(basis)).is_zero();
}

/// Isotropic of the maximal dimension (m + dim N(B)) / 2.
inline bool is_lagrangian(const SkewForm& b, const Subspace& w) {
  detail::require_dim(b.dim(), w.ambient_dim(), "Lagrangian test");
  return 2 * w.dim() == b.dim() + null_space(b).dim() && is_isotropic(b, w);
}

}  // namespace lagsel
