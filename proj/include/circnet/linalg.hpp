#pragma once

// Dense elimination over an exact field or floating point. Exact scalars use
// fraction-free (Bareiss) elimination with first-nonzero pivoting; doubles are
// handed to Eigen's full-pivoting LU.

#include <optional>
#include <utility>

#include "circnet/scalar.hpp"

namespace circnet::linalg {

namespace detail {

// In-place Bareiss forward elimination on the first `pivot_cols` columns.
// Returns the number of pivots found and accumulates the row-swap sign.
template <typename Scalar>
Index bareiss_eliminate(Matrix<Scalar>& m, Index pivot_cols, int& sign) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Scalar prev(1);
  Index r = 0;
  sign = 1;
  for (Index c = 0; c < pivot_cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      sign = -sign;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = Scalar(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace detail

template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return Scalar(1);
  if constexpr (ScalarTraits<Scalar>::exact) {
    Matrix<Scalar> m = a;
    int sign = 1;
    const Index n = m.rows();
    if (detail::bareiss_eliminate(m, n, sign) < n) return Scalar(0);
    // After Bareiss the last pivot equals the determinant (up to swaps).
    return sign > 0 ? Scalar(m(n - 1, n - 1)) : Scalar(-m(n - 1, n - 1));
  } else {
    return a.fullPivLu().determinant();
  }
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& a) {
  if (a.size() == 0) return 0;
  if constexpr (ScalarTraits<Scalar>::exact) {
    Matrix<Scalar> m = a;
    int sign = 1;
    return detail::bareiss_eliminate(m, m.cols(), sign);
  } else {
    Eigen::FullPivLU<Matrix<Scalar>> lu(a);
    lu.setThreshold(ScalarTraits<Scalar>::pivot_eps);
    return lu.rank();
  }
}

/// Solves a·x = b for square a; nullopt when a is singular.
template <typename Scalar>
std::optional<Matrix<Scalar>> solve(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  const Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
  if (n == 0) return Matrix<Scalar>(0, b.cols());
  if constexpr (ScalarTraits<Scalar>::exact) {
    Matrix<Scalar> m(n, n + b.cols());
    m << a, b;
    int sign = 1;
    if (detail::bareiss_eliminate(m, n, sign) < n) return std::nullopt;
    Matrix<Scalar> x(n, b.cols());
    for (Index k = 0; k < b.cols(); ++k) {
      for (Index i = n - 1; i >= 0; --i) {
        Scalar acc = m(i, n + k);
        for (Index j = i + 1; j < n; ++j) acc -= m(i, j) * x(j, k);
        x(i, k) = acc / m(i, i);
      }
    }
    return x;
  } else {
    Eigen::FullPivLU<Matrix<Scalar>> lu(a);
    lu.setThreshold(ScalarTraits<Scalar>::pivot_eps);
    if (!lu.isInvertible()) return std::nullopt;
    return Matrix<Scalar>(lu.solve(b));
  }
}

/// Columns of `a` selected by zero-based indices, in the given order.
template <typename Scalar, typename Indices>
Matrix<Scalar> select_columns(const Matrix<Scalar>& a, const Indices& cols) {
  Matrix<Scalar> out(a.rows(), static_cast<Index>(std::size(cols)));
  Index k = 0;
  for (auto c : cols) out.col(k++) = a.col(static_cast<Index>(c));
  return out;
}

}  // namespace circnet::linalg
