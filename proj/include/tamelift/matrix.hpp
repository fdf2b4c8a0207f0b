#pragma once

#include <optional>
#include <utility>

#include <Eigen/Core>

#include "tamelift/modint.hpp"
#include "tamelift/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<tamelift::Rational> : GenericNumTraits<tamelift::Rational> {
  using Real = tamelift::Rational;
  using NonInteger = tamelift::Rational;
  using Literal = tamelift::Rational;
  using Nested = tamelift::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<tamelift::ModInt> : GenericNumTraits<tamelift::ModInt> {
  using Real = tamelift::ModInt;
  using NonInteger = tamelift::ModInt;
  using Literal = tamelift::ModInt;
  using Nested = tamelift::ModInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace tamelift {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;

inline Rational field_inverse(const Rational& a) { return a.inverse(); }
inline ModInt field_inverse(const ModInt& a) { return a.inverse(); }
inline bool field_is_zero(const Rational& a) { return a.is_zero(); }
inline bool field_is_zero(const ModInt& a) { return a.is_zero(); }

/// Gauss-Jordan inverse over an exact field; nullopt when singular.
template <class S>
std::optional<Matrix<S>> inverse_exact(const Matrix<S>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Matrix<S> m = a;
  Matrix<S> inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = S(i == j ? 1 : 0);
  }
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && field_is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    m.row(col).swap(m.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    const S scale = field_inverse(m(col, col));
    for (Eigen::Index j = 0; j < n; ++j) {
      m(col, j) = m(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || field_is_zero(m(r, col))) continue;
      const S f = m(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        m(r, j) = m(r, j) - f * m(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Some exact solution of a x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
template <class S>
std::optional<Vector<S>> solve_exact(const Matrix<S>& a, const Vector<S>& b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Matrix<S> m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && field_is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    m.row(r).swap(m.row(p));
    const S scale = field_inverse(m(r, c));
    for (Eigen::Index j = c; j <= cols; ++j) m(r, j) = m(r, j) * scale;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || field_is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (Eigen::Index j = c; j <= cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i) {
    if (!field_is_zero(m(i, cols))) return std::nullopt;
  }
  Vector<S> x(cols);
  for (Eigen::Index j = 0; j < cols; ++j) x(j) = S(0);
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    x(pivot_cols[k]) = m(static_cast<Eigen::Index>(k), cols);
  }
  return x;
}

/// The constant bracket table b(i,j) = delta_{i,n+j} - delta_{i+n,j} on 2n
/// generators (x_1..x_n, p_1..p_n), as a matrix.
inline QMatrix poisson_matrix(std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(2 * n);
  QMatrix j(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Eigen::Index nn = static_cast<Eigen::Index>(n);
      j(r, c) = Rational((r == c + nn ? 1 : 0) - (r + nn == c ? 1 : 0));
    }
  }
  return j;
}

template <class S>
Matrix<S> identity_matrix(Eigen::Index n) {
  Matrix<S> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = S(i == j ? 1 : 0);
  }
  return m;
}

}  // namespace tamelift
