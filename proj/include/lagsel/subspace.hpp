#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lagsel/error.hpp"
#include "lagsel/matrix.hpp"

namespace lagsel {

/// A linear subspace of Q^m held in canonical form: the nonzero rows of the
/// reduced row echelon form of any spanning set. Two subspaces are equal as
/// sets exactly when their representations compare equal.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim), {}); }

  static Subspace full(std::size_t ambient_dim) {
    std::vector<std::size_t> pivots(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      pivots[i] = i;
    }
    return Subspace(ambient_dim, Matrix::identity(ambient_dim), std::move(pivots));
  }

  /// Row space of `generators`.
  static Subspace row_space(const Matrix& generators) {
    auto [reduced, pivots] = rref(generators);
    Matrix basis(pivots.size(), generators.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (std::size_t j = 0; j < generators.cols(); ++j) {
        basis(i, j) = reduced(i, j);
      }
    }
    return Subspace(generators.cols(), std::move(basis), std::move(pivots));
  }

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    return row_space(Matrix::from_rows(vectors, ambient_dim));
  }

  /// Span of the first `count` standard basis vectors.
  static Subspace coordinate(std::size_t ambient_dim, std::size_t count) {
    Matrix basis(count, ambient_dim);
    std::vector<std::size_t> pivots(count);
    for (std::size_t i = 0; i < count; ++i) {
      basis(i, i) = 1;
      pivots[i] = i;
    }
    return Subspace(ambient_dim, std::move(basis), std::move(pivots));
  }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  std::size_t codim() const noexcept { return ambient_dim_ - pivots_.size(); }

  /// dim() x ambient_dim() matrix in reduced row echelon form.
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      out.push_back(basis_.row_vector(i));
    }
    return out;
  }

  /// True iff v lies in this subspace.
  bool contains(const Vector& v) const {
    if (v.size() != ambient_dim_) {
      throw DimensionMismatch("subspace membership", ambient_dim_, v.size());
    }
    Vector residual = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Rational coeff = residual[pivots_[r]];
      if (coeff.is_zero()) {
        continue;
      }
      for (std::size_t j = pivots_[r]; j < ambient_dim_; ++j) {
        residual[j] -= coeff * basis_(r, j);
      }
    }
    return lagsel::is_zero(residual);
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : Mx = 0}.
inline Subspace kernel(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vector> generators;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    Vector x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      x[pivots[r]] = -reduced(r, free);
    }
    generators.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), generators);
}

namespace detail {

inline void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch(what, a.ambient_dim(), b.ambient_dim());
  }
}

}  // namespace detail

/// {w : <s, w> = 0 for all s in S} for the standard dot product.
inline Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

inline Subspace sum(const Subspace& a, const Subspace& b) {
  detail::require_same_ambient(a, b, "subspace sum");
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  detail::require_same_ambient(a, b, "subspace intersection");
  return kernel(vstack(annihilator(a).basis(), annihilator(b).basis()));
}

/// True iff `inner` is a subset of `outer`.
inline bool contains(const Subspace& outer, const Subspace& inner) {
  detail::require_same_ambient(outer, inner, "subspace containment");
  if (inner.dim() > outer.dim()) {
    return false;
  }
  for (std::size_t i = 0; i < inner.dim(); ++i) {
    if (!outer.contains(inner.basis().row_vector(i))) {
      return false;
    }
  }
  return true;
}

}  // namespace lagsel
