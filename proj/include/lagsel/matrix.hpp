#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lagsel/error.hpp"
#include "lagsel/rational.hpp"

namespace lagsel {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  /// Builds a matrix from row vectors, each of length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw DimensionMismatch("matrix row", cols, rows[i].size());
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  /// Builds a matrix whose columns are the given vectors, each of length `rows`.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) {
        throw DimensionMismatch("matrix column", rows, columns[j].size());
      }
      for (std::size_t i = 0; i < rows; ++i) {
        m(i, j) = columns[j][i];
      }
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const {
    auto r = row(i);
    return Vector(r.begin(), r.end());
  }
  Vector column(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      c[i] = (*this)(i, j);
    }
    return c;
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      t(j, i) = a(i, j);
    }
  }
  return t;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product", a.cols(), b.rows());
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

inline Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) {
    throw DimensionMismatch("matrix-vector product", a.cols(), x.size());
  }
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      y[i] += a(i, k) * x[k];
    }
  }
  return y;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix sum", a.rows() * a.cols(), b.rows() * b.cols());
  }
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) = a(i, j) + b(i, j);
    }
  }
  return c;
}

inline Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) *= s;
    }
  }
  return c;
}

inline Rational dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("dot product", x.size(), y.size());
  }
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * y[i];
  }
  return s;
}

inline bool is_zero(const Vector& v) {
  for (const auto& e : v) {
    if (!e.is_zero()) {
      return false;
    }
  }
  return true;
}

/// The first `count` columns of `a`.
inline Matrix leading_columns(const Matrix& a, std::size_t count) {
  Matrix c(a.rows(), count);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      c(i, j) = a(i, j);
    }
  }
  return c;
}

/// Rows of `top` followed by rows of `bottom`.
inline Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw DimensionMismatch("vertical stack", top.cols(), bottom.cols());
  }
  Matrix c(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) {
      c(i, j) = top(i, j);
    }
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) {
      c(top.rows() + i, j) = bottom(i, j);
    }
  }
  return c;
}

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Zero rows sink
/// to the bottom; the shape of the input is kept.
inline RowEchelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(pivot, j), m(lead_row, j));
      }
    }
    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) {
      m(lead_row, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, col).is_zero()) {
        continue;
      }
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) -= factor * m(lead_row, j);
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Inverse of a square matrix, or throws InvalidInput when singular.
inline Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("inverse of non-square matrix", a.rows(), a.cols());
  }
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      aug(i, j) = a(i, j);
    }
    aug(i, n + i) = 1;
  }
  auto [reduced, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw InvalidInput("matrix is singular");
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inv(i, j) = reduced(i, n + j);
    }
  }
  return inv;
}

}  // namespace lagsel
